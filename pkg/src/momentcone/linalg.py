"""Exact rational linear algebra on small integer matrices.

All routines accept sequences of integer (or Fraction) rows and never fall
back to floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def clear_denominators(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive integer into a primitive integer vector."""
    den = 1
    for x in vec:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(x * den) for x in vec))


def _echelon(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix (fraction-free elimination)."""
    mat = [list(row) for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        prow = mat[r]
        p = prow[c]
        for i in range(r + 1, len(mat)):
            row = mat[i]
            f = row[c]
            if f:
                new = [p * x - f * y for x, y in zip(row, prow)]
                mat[i] = list(primitive(new))
        r += 1
        if r == len(mat):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of the right kernel {x : rows @ x = 0}."""
    ech, pivots = _echelon(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(ech, pivots):
            vec[p] = -row[f]
        basis.append(clear_denominators(vec))
    return basis


def solve_unique(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    ech, pivots = _echelon(aug, n + 1)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [ech[i][n] for i in range(n)]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))

"""Horn's problem: the eigenvalue cone of Hermitian triples X + Y + Z = 0.

Subsets are 1-based and stored as sorted tuples.  A point of the cone is a
triple ``(x, y, z)`` of non-increasing spectra with ``x, y >= 0``,
``z <= 0`` and ``|x| + |y| + |z| = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .ressayre import PitVerdict, TangentMatrix, TraceViolationError, det_nonzero_pit, det_symbolic
from .weightsys import WeightVector


@dataclass(frozen=True)
class SubsetTriple:
    d: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]

    def __post_init__(self):
        r = len(self.I)
        if not (1 <= r < self.d) or len(self.J) != r or len(self.K) != r:
            raise ValueError("subsets must share a size r with 1 <= r < d")
        for s in (self.I, self.J, self.K):
            if list(s) != sorted(set(s)) or s[0] < 1 or s[-1] > self.d:
                raise ValueError(f"{s} is not a strictly increasing subset of [1..{self.d}]")

    @property
    def r(self) -> int:
        return len(self.I)

    def subsets(self):
        return (self.I, self.J, self.K)


def complement(subset: Sequence[int], d: int) -> tuple[int, ...]:
    s = set(subset)
    return tuple(i for i in range(1, d + 1) if i not in s)


def lambda_of_subset(subset: Sequence[int], d: int) -> tuple[int, ...]:
    """``(d - r - (i_a - a))`` for ``a = 1..r``."""
    r = len(subset)
    return tuple(d - r - (i - a) for a, i in enumerate(sorted(subset), start=1))


def horn_trace(t: SubsetTriple) -> bool:
    return sum(sum(lambda_of_subset(s, t.d)) for s in t.subsets()) == 2 * t.r * (t.d - t.r)


def _subsets(d, r):
    return list(combinations(range(1, d + 1), r))


@lru_cache(maxsize=None)
def horn_sets(d: int, r: int) -> frozenset:
    """Horn(d, r) through the classical recursion on smaller ranks."""
    if not (1 <= r < d):
        raise ValueError("need 1 <= r < d")
    subs = _subsets(d, r)
    lower = [(s, horn_sets(r, s)) for s in range(1, r)]
    out = set()
    for I, J, K in product(subs, repeat=3):
        t = SubsetTriple(d, I, J, K)
        if not horn_trace(t):
            continue
        if all(_sub_inequality(t, s, hs) for s, hs in lower):
            out.add(t)
    return frozenset(out)


def _sub_inequality(t: SubsetTriple, s: int, hs) -> bool:
    bound = s * (t.d + 1) + s * (s + 1) // 2
    for u in hs:
        total = (sum(t.I[a - 1] for a in u.I) + sum(t.J[b - 1] for b in u.J)
                 + sum(t.K[c - 1] for c in u.K))
        if total > bound:
            return False
    return True


def _nonincreasing(v):
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def horn_membership(x, y, z) -> tuple[bool, str]:
    """Decide membership of ``(x, y, z)`` in the Horn cone; returns (verdict, reason)."""
    x = tuple(Fraction(v) for v in x)
    y = tuple(Fraction(v) for v in y)
    z = tuple(Fraction(v) for v in z)
    d = len(x)
    if len(y) != d or len(z) != d:
        return False, "spectra have different lengths"
    for name, v in (("x", x), ("y", y), ("z", z)):
        if not _nonincreasing(v):
            return False, f"{name} is not non-increasing"
    if d and (x[-1] < 0 or y[-1] < 0):
        return False, "x and y must be non-negative"
    if d and z[0] > 0:
        return False, "z must be non-positive"
    if sum(x) + sum(y) + sum(z) != 0:
        return False, "traces do not sum to zero"
    for r in range(1, d):
        for t in sorted(horn_sets(d, r), key=lambda t: (t.I, t.J, t.K)):
            val = sum(x[i - 1] for i in t.I) + sum(y[j - 1] for j in t.J) + sum(z[k - 1] for k in t.K)
            if val < 0:
                return False, f"violates the inequality for I={t.I}, J={t.J}, K={t.K}"
    return True, "all Horn inequalities hold"


def horn_condition(t: SubsetTriple) -> bool:
    """``(lambda_I, lambda_J, lambda_K - 2(d - r)) in C(r)``."""
    if not horn_trace(t):
        raise ValueError("the trace condition fails")
    shift = 2 * (t.d - t.r)
    x = lambda_of_subset(t.I, t.d)
    y = lambda_of_subset(t.J, t.d)
    z = tuple(v - shift for v in lambda_of_subset(t.K, t.d))
    return horn_membership(x, y, z)[0]


def kappa_ijk(t: SubsetTriple) -> tuple[WeightVector, WeightVector]:
    """The weights on the two diagonal blocks of the centralizer."""
    d, r = t.d, t.r
    lam = [lambda_of_subset(s, d) for s in t.subsets()]
    lamc = [lambda_of_subset(complement(s, d), d) for s in t.subsets()]
    first = WeightVector((lam[0], lam[1], tuple(v - 2 * (d - r) for v in lam[2])))
    second = WeightVector((lamc[0], lamc[1], tuple(v - r for v in lamc[2])))
    return first, second


def free_positions(subset: Sequence[int], d: int) -> list[tuple[int, int]]:
    """Entries ``(b, a)`` of a (d - r) x r matrix that may be nonzero in T_I (0-based)."""
    comp = complement(subset, d)
    return [(b, a) for b, ic in enumerate(comp) for a, i in enumerate(subset) if i < ic]


def horn_tangent_matrix(t: SubsetTriple) -> TangentMatrix:
    """Matrix of ``(X, Y, Z) -> (X a - a' Z, Y b - b' Z)`` over the entries of a, b, a', b'."""
    d, r = t.d, t.r
    q = d - r
    names = ([f"a{i}{j}" for i in range(r) for j in range(r)] + [f"b{i}{j}" for i in range(r) for j in range(r)]
             + [f"a'{i}{j}" for i in range(q) for j in range(q)]
             + [f"b'{i}{j}" for i in range(q) for j in range(q)])
    var = {n: k for k, n in enumerate(names)}
    rows = [(blk, b, g) for blk in (0, 1) for b in range(q) for g in range(r)]
    row_of = {x: k for k, x in enumerate(rows)}
    cols = ([("X", p) for p in free_positions(t.I, d)] + [("Y", p) for p in free_positions(t.J, d)]
            + [("Z", p) for p in free_positions(t.K, d)])
    if len(rows) != len(cols):
        raise TraceViolationError(f"domain has dimension {len(cols)}, codomain {len(rows)}")
    entries = [[{} for _ in cols] for _ in rows]
    for ci, (kind, (bb, aa)) in enumerate(cols):
        if kind in ("X", "Y"):
            blk = 0 if kind == "X" else 1
            letter = "a" if kind == "X" else "b"
            # E_{bb,aa} times a: row bb picks up row aa of a.
            for g in range(r):
                entries[row_of[(blk, bb, g)]][ci][var[f"{letter}{aa}{g}"]] = 1
        else:
            # -a' E_{bb,aa}: column aa picks up minus column bb of a' (and of b').
            for blk, letter in ((0, "a'"), (1, "b'")):
                for dd in range(q):
                    entries[row_of[(blk, dd, aa)]][ci][var[f"{letter}{dd}{bb}"]] = -1
    return TangentMatrix(rows, cols, names, entries)


def horn_tangent_det(t: SubsetTriple, trials: int = 2, seed: int = 0) -> PitVerdict:
    m = horn_tangent_matrix(t)
    return det_nonzero_pit(m, trials, seed, key=(t.d, t.I, t.J, t.K))


def horn_tangent_det_symbolic(t: SubsetTriple, limit: int = 12):
    return det_symbolic(horn_tangent_matrix(t), limit)


def horn_cartan(t: SubsetTriple):
    """``H_IJK = (E_I, E_J, E_K)`` as a Cartan element of U(d)^3."""
    from .weightsys import CartanElement, horn_group

    parts = tuple(tuple(1 if i in s else 0 for i in range(1, t.d + 1)) for s in t.subsets())
    return CartanElement(horn_group(t.d), parts, ())

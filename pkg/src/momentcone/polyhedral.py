"""Exact rational polyhedral cones.

Cones are described either by inequalities ``a . x >= 0`` together with
equalities ``e . x == 0`` (:class:`ConeHRep`) or by extreme rays
(:class:`ConeVRep`).  Conversion uses the double description method with the
combinatorial adjacency test; everything is carried out over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import clear_denominators, dot, nullspace, primitive, rank, solve_unique


class DimensionDeficiencyError(ValueError):
    """The cone is not full-dimensional inside its equality subspace."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"cone has dimension {actual}, expected {expected} (deficit {expected - actual})")
        self.expected = expected
        self.actual = actual
        self.deficit = expected - actual


@dataclass
class ConeHRep:
    dim: int
    equalities: list[tuple[int, ...]] = field(default_factory=list)
    inequalities: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.equalities = _dedupe([canonicalize(e) for e in self.equalities if any(e)])
        self.inequalities = _dedupe([canonicalize(a) for a in self.inequalities if any(a)])
        for v in self.equalities + self.inequalities:
            if len(v) != self.dim:
                raise ValueError(f"normal of length {len(v)} in ambient dimension {self.dim}")


@dataclass
class ConeVRep:
    dim: int
    rays: list[tuple[int, ...]] = field(default_factory=list)
    lineality: list[tuple[int, ...]] = field(default_factory=list)


def _dedupe(vecs):
    seen = set()
    out = []
    for v in vecs:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def canonicalize(vec: Sequence) -> tuple[int, ...]:
    """Primitive integer vector with the same direction as a nonzero rational vector."""
    if not any(vec):
        raise ValueError("cannot canonicalize the zero vector")
    return clear_denominators(vec)


# -- double description -------------------------------------------------------


class DDState:
    """Rays of a pointed cone together with their zero sets (bitmasks).

    Bit ``k`` of a zero set refers to the ``k``-th constraint fed to the state.
    States are immutable; :meth:`add` returns a new one, which lets callers
    backtrack cheaply (the tableau enumeration relies on this).
    """

    __slots__ = ("dim", "rays", "zeros", "nconstraints")

    def __init__(self, dim, rays, zeros, nconstraints):
        self.dim = dim
        self.rays = rays
        self.zeros = zeros
        self.nconstraints = nconstraints

    @classmethod
    def simplicial(cls, rows: Sequence[Sequence[int]]) -> "DDState":
        """Start from ``dim`` linearly independent inequalities."""
        n = len(rows)
        rays = []
        for i in range(n):
            rhs = [0] * n
            rhs[i] = 1
            rays.append(clear_denominators(solve_unique(rows, rhs)))
        zeros = [((1 << n) - 1) ^ (1 << i) for i in range(n)]
        return cls(n, rays, zeros, n)

    def values(self, row):
        return [dot(row, r) for r in self.rays]

    def add(self, row: Sequence[int], values=None) -> "DDState":
        bit = 1 << self.nconstraints
        if values is None:
            values = self.values(row)
        neg = []
        rays, zeros = [], []
        for r, z, v in zip(self.rays, self.zeros, values):
            if v > 0:
                rays.append(r)
                zeros.append(z)
            elif v < 0:
                neg.append((r, z, v))
            else:
                rays.append(r)
                zeros.append(z | bit)
        if neg:
            new = _combine(self, values, neg, bit)
            for r, z in new:
                rays.append(r)
                zeros.append(z)
        return DDState(self.dim, rays, zeros, self.nconstraints + 1)


def _combine(state, values, neg, bit):
    dim = state.dim
    need = dim - 2
    all_zeros = state.zeros
    pos = [(r, z, v) for r, z, v in zip(state.rays, state.zeros, values) if v > 0]
    out = []
    for rp, zp, vp in pos:
        for rn, zn, vn in neg:
            common = zp & zn
            if common.bit_count() < need:
                continue
            hits = 0
            for z in all_zeros:
                if z & common == common:
                    hits += 1
                    if hits > 2:
                        break
            if hits > 2:
                continue
            new = primitive([vp * b - vn * a for a, b in zip(rp, rn)])
            out.append((new, common | bit))
    return out


def _pick_basis(rows):
    """Greedily choose indices of ``rank(rows)`` linearly independent rows."""
    chosen: list[int] = []
    basis_rows: list[tuple[int, ...]] = []
    r = 0
    for i, row in enumerate(rows):
        if not any(row):
            continue
        if rank(basis_rows + [row]) > r:
            chosen.append(i)
            basis_rows.append(row)
            r += 1
    return chosen


def _equality_chart(h: ConeHRep):
    """Integer basis (as columns) of the equality subspace."""
    if h.equalities:
        return nullspace(h.equalities, h.dim)
    return [tuple(1 if i == j else 0 for i in range(h.dim)) for j in range(h.dim)]


def _to_chart(vec, chart):
    return tuple(dot(vec, col) for col in chart)


def _from_chart(y, chart, dim):
    return tuple(sum(c[i] * yi for c, yi in zip(chart, y)) for i in range(dim))


def dual_description(h: ConeHRep, order: str = "l1") -> ConeVRep:
    """Extreme rays (and lineality) of ``{x : E x = 0, A x >= 0}``.

    ``order`` selects the insertion order of the non-initial inequalities:
    ``"l1"`` inserts normals by increasing L1 norm; ``"given"`` keeps the
    input order.
    """
    chart = _equality_chart(h)
    k = len(chart)
    if k == 0:
        return ConeVRep(h.dim)
    rows = [_to_chart(a, chart) for a in h.inequalities]
    rows = [primitive(r) for r in rows if any(r)]
    lineality = nullspace(rows, k) if rows else [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    lin_out = [canonicalize(_from_chart(v, chart, h.dim)) for v in lineality]
    if lineality:
        # Work in the orthogonal complement of the lineality space.
        sub = nullspace(lineality, k)
        if not sub:
            return ConeVRep(h.dim, [], lin_out)
        rows2 = [primitive(tuple(dot(r, c) for c in sub)) for r in rows]
        rows2 = [r for r in rows2 if any(r)]
        inner = _pointed_rays(rows2, len(sub), order)
        rays = [_from_chart(_from_chart(y, sub, k), chart, h.dim) for y in inner]
        return ConeVRep(h.dim, sorted(canonicalize(r) for r in rays), lin_out)
    inner = _pointed_rays(rows, k, order)
    rays = [canonicalize(_from_chart(y, chart, h.dim)) for y in inner]
    return ConeVRep(h.dim, sorted(rays), [])


def _pointed_rays(rows, k, order):
    if k == 0:
        return []
    basis = _pick_basis(rows)
    state = DDState.simplicial([rows[i] for i in basis])
    chosen = set(basis)
    rest = [rows[i] for i in range(len(rows)) if i not in chosen]
    if order == "l1":
        # Short normals first keeps the intermediate ray sets small in practice.
        rest.sort(key=lambda r: (sum(abs(x) for x in r), r))
    elif order != "given":
        raise ValueError(f"unknown insertion order {order!r}")
    for row in rest:
        state = state.add(row)
        if not state.rays:
            break
    return state.rays


# -- queries -------------------------------------------------------------------


def contains(h: ConeHRep, x: Sequence) -> bool:
    if len(x) != h.dim:
        raise ValueError("dimension mismatch")
    return all(dot(e, x) == 0 for e in h.equalities) and all(dot(a, x) >= 0 for a in h.inequalities)


def dimension(h: ConeHRep, v: ConeVRep | None = None) -> int:
    """Dimension of the linear hull of the cone."""
    if v is None:
        v = dual_description(h)
    return rank(list(v.rays) + list(v.lineality))


def tight_rays(a: Sequence[int], rays: Iterable[Sequence[int]]) -> list:
    return [r for r in rays if dot(a, r) == 0]


def remove_redundant(h: ConeHRep, v: ConeVRep | None = None, expected_dim: int | None = None) -> ConeHRep:
    """Keep only facet-defining inequalities, decided from the extreme rays."""
    if v is None:
        v = dual_description(h)
    if v.lineality:
        raise ValueError("redundancy removal expects a pointed cone")
    full = h.dim - rank(h.equalities) if expected_dim is None else expected_dim
    d = rank(v.rays)
    if d != full:
        raise DimensionDeficiencyError(full, d)
    facets = []
    seen = set()
    for a in h.inequalities:
        tight = tight_rays(a, v.rays)
        if len(tight) < d - 1 or rank(tight) != d - 1:
            continue
        key = _facet_key(a, v.rays)
        if key in seen:
            continue
        seen.add(key)
        facets.append(a)
    return ConeHRep(h.dim, list(h.equalities), facets)


def _facet_key(a, rays):
    # Two normals define the same facet iff they agree on the rays; the
    # incidence vector with the tight set is a canonical key for a facet.
    return tuple(dot(a, r) == 0 for r in rays)


def facets_from_rays(v: ConeVRep, equalities: Sequence[Sequence[int]]) -> ConeHRep:
    """Facet normals of a pointed cone recovered from its extreme rays.

    The facets are the extreme rays of the polar cone, computed inside the
    equality subspace and lifted back to ambient normals orthogonal to the
    equality normals.
    """
    eqs = [tuple(e) for e in equalities]
    chart = nullspace(eqs, v.dim) if eqs else [
        tuple(1 if i == j else 0 for i in range(v.dim)) for j in range(v.dim)]
    k = len(chart)
    # Gram matrix G = N^T N of the chart; a functional c on chart coordinates
    # lifts to a = N G^{-1} c, which is orthogonal to the equality normals.
    gram = [[dot(ci, cj) for cj in chart] for ci in chart]
    ys = [_coords_in_chart(r, chart, gram) for r in v.rays]
    polar = _pointed_rays([clear_denominators(y) for y in ys], k, "l1")
    normals = []
    for c in polar:
        w = solve_unique(gram, list(c))
        normals.append(canonicalize(_from_chart(w, chart, v.dim)))
    return ConeHRep(v.dim, eqs, normals)


def _coords_in_chart(x, chart, gram):
    return solve_unique(gram, [dot(x, c) for c in chart])


# -- symmetry ------------------------------------------------------------------


def apply_perm(perm: Sequence[int], item: Sequence):
    """Coordinate relabelling: ``out[i] = item[perm[i]]``."""
    return tuple(item[p] for p in perm)


def dedupe_up_to_perms(items: Iterable[Sequence], group: Sequence[Sequence[int]],
                       key: Callable | None = None):
    """Orbit representatives (lexicographic minimum) and orbit sizes.

    ``group`` lists coordinate permutations (including the identity).  Items
    are compared after ``key`` (default: the tuple itself).
    """
    key = key or (lambda t: t)
    items = [tuple(x) for x in items]
    done = set()
    reps = []
    for it in items:
        if it in done:
            continue
        orbit = {apply_perm(g, it) for g in group}
        done |= orbit
        rep = min(orbit, key=key)
        reps.append((rep, len(orbit)))
    reps.sort(key=lambda t: key(t[0]))
    return reps

"""Candidate normal vectors for the Kronecker moment cone.

The pipeline runs in four stages:

1. enumerate additive rectangular tableaux (cubicles) and collect their
   extreme rays, the extremal edges of the bipartite problem;
2. glue extremal edges into dominant triples ``(H_A, H_B, H_C)``;
3. extend each triple by every ``z`` that makes it admissible;
4. move each admissible element by the Weyl group elements whose flipped
   shuffle lengths add up to the number of weights negative on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import gcd
from typing import Iterator, Sequence

from .linalg import clear_denominators, primitive, rank
from .polyhedral import ConeHRep, DDState, dedupe_up_to_perms
from .repmodel import Representation, kronecker_rep
from .weightsys import (CartanElement, act_on_vector, compose, kronecker_group, longest, pairing,
                        shuffles_of_length, weight_functional)

Tableau = tuple[tuple[int, ...], ...]


# -- tableaux and cubicles -------------------------------------------------------


def _fill_orders(a: int, b: int) -> Iterator[list[tuple[int, int]]]:
    """Cell sequences of all standard a x b tableaux (cell of entry 1, 2, ...)."""
    filled = [0] * a
    order: list[tuple[int, int]] = []

    def rec():
        if len(order) == a * b:
            yield list(order)
            return
        for i in range(a):
            j = filled[i]
            if j < b and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                order.append((i, j))
                yield from rec()
                order.pop()
                filled[i] -= 1

    yield from rec()


def tableau_from_order(order: Sequence[tuple[int, int]], a: int, b: int) -> Tableau:
    grid = [[0] * b for _ in range(a)]
    for n, (i, j) in enumerate(order, start=1):
        grid[i][j] = n
    return tuple(tuple(row) for row in grid)


def tableau_order(t: Tableau) -> list[tuple[int, int]]:
    cells = [(t[i][j], (i, j)) for i in range(len(t)) for j in range(len(t[0]))]
    return [c for _, c in sorted(cells)]


def is_standard(t: Tableau) -> bool:
    a, b = len(t), len(t[0])
    if sorted(x for row in t for x in row) != list(range(1, a * b + 1)):
        return False
    return all((j + 1 >= b or t[i][j] < t[i][j + 1]) and (i + 1 >= a or t[i][j] < t[i + 1][j])
               for i in range(a) for j in range(b))


def rectangular_tableaux(a: int, b: int) -> Iterator[Tableau]:
    """All standard Young tableaux of rectangular shape a x b."""
    if a < 1 or b < 1:
        raise ValueError("shape must be positive")
    for order in _fill_orders(a, b):
        yield tableau_from_order(order, a, b)


def _fundamental_coweights(d: int) -> list[tuple[int, ...]]:
    return [tuple([d - k] * k + [-k] * (d - k)) for k in range(1, d)]


def _dominant_pair_state(a: int, b: int) -> DDState:
    """The dominant cone of traceless pairs; its rays are the fundamental coweights."""
    rays, zeros = [], []
    n = a + b - 2
    for k, w in enumerate(_fundamental_coweights(a)):
        rays.append(primitive(w + (0,) * b))
        zeros.append(((1 << n) - 1) ^ (1 << k))
    for k, w in enumerate(_fundamental_coweights(b)):
        rays.append(primitive((0,) * a + w))
        zeros.append(((1 << n) - 1) ^ (1 << (a - 1 + k)))
    return DDState(n, rays, zeros, n)


def _order_row(a: int, b: int, hi: tuple[int, int], lo: tuple[int, int]) -> tuple[int, ...]:
    """Normal of ``H_A[hi_0] + H_B[hi_1] >= H_A[lo_0] + H_B[lo_1]``."""
    row = [0] * (a + b)
    row[hi[0]] += 1
    row[a + hi[1]] += 1
    row[lo[0]] -= 1
    row[a + lo[1]] -= 1
    return tuple(row)


def _extend(state: DDState, row) -> DDState | None:
    """Add one order constraint, or return None if the strict order becomes infeasible."""
    vals = state.values(row)
    if not any(v > 0 for v in vals):
        return None
    return state.add(row, vals)


@dataclass(frozen=True)
class Cubicle:
    tableau: Tableau
    rays: tuple[tuple[int, ...], ...]
    """Extreme rays as flat pairs ``H_A + H_B`` (integer, primitive)."""


def cubicle_of(t: Tableau) -> Cubicle | None:
    """The cubicle encoded by ``t``, or None when ``t`` is not additive."""
    a, b = len(t), len(t[0])
    if not is_standard(t):
        raise ValueError("not a standard tableau")
    order = tableau_order(t)
    if a == 1 or b == 1:
        return _trivial_cubicle(t, a, b)
    state = _dominant_pair_state(a, b)
    for prev, cur in zip(order, order[1:]):
        state = _extend(state, _order_row(a, b, prev, cur))
        if state is None:
            return None
    return Cubicle(t, tuple(sorted(state.rays)))


def _trivial_cubicle(t, a, b):
    # With a single row or column the order is just dominance of one factor.
    rays = []
    if a > 1:
        rays = [w + (0,) * b for w in _fundamental_coweights(a)]
    if b > 1:
        rays = [(0,) * a + w for w in _fundamental_coweights(b)]
    return Cubicle(t, tuple(sorted(primitive(r) for r in rays)))


@dataclass
class EdgeEnumeration:
    a: int
    b: int
    tableaux: int
    cubicles: int
    edges: list[tuple[tuple[int, ...], tuple[int, ...]]]
    edges_up_to_perms: int


def enumerate_cubicles(a: int, b: int) -> Iterator[Cubicle]:
    """Depth-first walk over tableau prefixes, pruning non-additive ones early."""
    if a == 1 or b == 1:
        t = tableau_from_order(next(_fill_orders(a, b)), a, b)
        yield _trivial_cubicle(t, a, b)
        return
    order: list[tuple[int, int]] = [(0, 0)]
    filled = [1] + [0] * (a - 1)

    def rec(state):
        if len(order) == a * b:
            yield Cubicle(tableau_from_order(order, a, b), tuple(sorted(state.rays)))
            return
        prev = order[-1]
        for i in range(a):
            j = filled[i]
            if j < b and (i == 0 or filled[i - 1] > j):
                nxt = _extend(state, _order_row(a, b, prev, (i, j)))
                if nxt is None:
                    continue
                filled[i] += 1
                order.append((i, j))
                yield from rec(nxt)
                order.pop()
                filled[i] -= 1

    yield from rec(_dominant_pair_state(a, b))


def count_tableaux(a: int, b: int) -> int:
    return sum(1 for _ in _fill_orders(a, b))


def split_pair(flat: Sequence[int], a: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(flat[:a]), tuple(flat[a:])


def pair_swap_group(a: int, b: int) -> list[tuple[int, ...]]:
    """Coordinate permutations of a flat pair: identity, plus the swap if a == b."""
    ident = tuple(range(a + b))
    if a != b:
        return [ident]
    return [ident, tuple(range(a, a + b)) + tuple(range(a))]


_EDGE_CACHE: dict[tuple[int, int], EdgeEnumeration] = {}


def extremal_edges(a: int, b: int) -> EdgeEnumeration:
    """Extremal edges of the bipartite problem, with tableau and cubicle counts."""
    key = (a, b)
    if key in _EDGE_CACHE:
        return _EDGE_CACHE[key]
    if a < 1 or b < 1:
        raise ValueError("dimensions must be positive")
    rays = set()
    ncub = 0
    for cub in enumerate_cubicles(a, b):
        ncub += 1
        rays.update(cub.rays)
    flat = sorted(rays)
    reps = dedupe_up_to_perms(flat, pair_swap_group(a, b))
    res = EdgeEnumeration(a, b, count_tableaux(a, b), ncub, [split_pair(r, a) for r in flat], len(reps))
    _EDGE_CACHE[key] = res
    return res


def _diff_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v[1:]:
        g = gcd(g, x - v[0])
    return g


def edge_component_primitivity(edge) -> bool:
    """Check that both components of an integer pair are zero or primitive.

    Primitivity refers to the lattice dual to the root lattice, in which a
    traceless vector is primitive when its coordinate differences are
    coprime.  A pair stored as a primitive integer vector has this property
    for both nonzero components exactly when their difference-gcds agree.
    """
    ha, hb = edge
    g = 0
    for x in tuple(ha) + tuple(hb):
        g = gcd(g, x)
    if g != 1:
        return False
    ga, gb = _diff_gcd(ha), _diff_gcd(hb)
    if ga == 0 or gb == 0:
        return True
    return ga == gb


# -- tripartite assembly ----------------------------------------------------------


def subsystem_perm_group(dims: Sequence[int], scalars: int = 0) -> list[tuple[int, ...]]:
    """Coordinate permutations that swap factors of equal rank (flat Cartan layout)."""
    offs, pos = [], 0
    for d in dims:
        offs.append(pos)
        pos += d
    tail = tuple(range(pos, pos + scalars))
    group = []
    for perm in permutations(range(len(dims))):
        if any(dims[perm[k]] != dims[k] for k in range(len(dims))):
            continue
        coords = []
        for k in range(len(dims)):
            src = perm[k]
            coords.extend(range(offs[src], offs[src] + dims[src]))
        group.append(tuple(coords) + tail)
    return group


@dataclass
class CandidateSet:
    stage: str
    dims: tuple[int, ...]
    elements: list[CartanElement] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.elements)

    @property
    def up_to_perms(self) -> int:
        return len(self.orbit_representatives())

    def orbit_representatives(self):
        group = subsystem_perm_group(self.dims, self.elements[0].group.scalar_count if self.elements else 0)
        return dedupe_up_to_perms([h.flat for h in self.elements], group)


def _direction(vec) -> tuple[int, ...] | None:
    if not any(vec):
        return None
    return clear_denominators(vec)


def _edge_index(a: int, b: int):
    """Map direction of the first component to the list of edges (first, second)."""
    edges = extremal_edges(a, b).edges
    by_first: dict = {}
    keys = set()
    for x, y in edges:
        by_first.setdefault(_direction(x), []).append((x, y))
        keys.add(x + y)
    return by_first, keys


def _pair_ok(x, y, keys) -> bool:
    if not any(x) and not any(y):
        return True
    return clear_denominators(tuple(x) + tuple(y)) in keys


def _scaled_partners(x, index):
    """Vectors z with (x, z) proportional to an edge; x must be nonzero."""
    dx = _direction(x)
    out = []
    for ex, ez in index.get(dx, []):
        i = next(k for k, v in enumerate(ex) if v)
        s = Fraction(x[i], ex[i])
        out.append(tuple(s * v for v in ez))
    return out


def tripartite_candidates(a: int, b: int, c: int) -> CandidateSet:
    """Dominant primitive triples whose pairwise restrictions are extremal edges or zero."""
    if not (1 < a <= b <= c <= a * b):
        raise ValueError("need 1 < a <= b <= c <= ab")
    ab_edges = extremal_edges(a, b).edges
    ac_index, ac_keys = _edge_index(a, c)
    bc_index, bc_keys = _edge_index(b, c)
    group = kronecker_group(a, b, c)
    zero_c = (0,) * c
    found = set()
    pairs = list(ab_edges) + [((0,) * a, (0,) * b)]
    for x, y in pairs:
        if any(x):
            options = _scaled_partners(x, ac_index) + [zero_c]
        elif any(y):
            options = _scaled_partners(y, bc_index) + [zero_c]
        else:
            options = [z for (ex, z) in extremal_edges(a, c).edges if not any(ex)]
        for z in options:
            if not (_pair_ok(x, z, ac_keys) and _pair_ok(y, z, bc_keys)):
                continue
            flat = tuple(x) + tuple(y) + tuple(z)
            if not any(flat):
                continue
            found.add(clear_denominators(flat))
    elements = [CartanElement.from_flat(group, f + (0,)) for f in sorted(found)]
    return CandidateSet("E+", (a, b, c), elements)


def triple_of(h: CartanElement) -> tuple[tuple[int, ...], ...]:
    return h.parts


# -- admissibility -----------------------------------------------------------------


def is_admissible(rep: Representation, h: CartanElement) -> bool:
    """The weights orthogonal to ``h`` span the hyperplane ``h^perp``."""
    if h.is_zero():
        raise ValueError("H must be nonzero")
    rows = [weight_functional(rep.group, rep.weights[v]) for v in rep.labels
            if pairing(h, rep.weights[v]) == 0]
    return rank(rows) == rep.group.rank - 1


def _weight_sums(rep: Representation, triple):
    """Group basis labels by the value of the triple part of the pairing."""
    sums: dict = {}
    for v in rep.labels:
        w = rep.weights[v]
        s = sum(hf * wf for part, wpart in zip(triple, w.parts) for hf, wf in zip(part, wpart))
        sums.setdefault(s, []).append(v)
    return sums


def admissible_z(rep: Representation, triple: CartanElement) -> list[CartanElement]:
    """All canonical ``(H_A, H_B, H_C, z)`` extending ``triple`` admissibly.

    Every weight has charge 1, so ``(H, w) = s(w) + z`` where ``s`` is the
    triple part; an admissible hyperplane contains a weight, hence ``z`` is
    one of the values ``-s(w)``.
    """
    parts = triple.parts
    target = rep.group.rank - 1
    out = []
    for s, labels in sorted(_weight_sums(rep, parts).items()):
        rows = [weight_functional(rep.group, rep.weights[v]) for v in labels]
        if rank(rows) != target:
            continue
        flat = tuple(x for p in parts for x in p) + (-s,)
        out.append(CartanElement.from_flat(rep.group, clear_denominators(flat)))
    return out


def admissible_candidates(rep: Representation, plus: CandidateSet) -> CandidateSet:
    elems = []
    for t in plus.elements:
        elems.extend(admissible_z(rep, t))
    elems.sort(key=lambda h: h.flat)
    return CandidateSet("E+adm", plus.dims, elems)


# -- trace filter ------------------------------------------------------------------


def negative_weight_count(rep: Representation, h: CartanElement) -> int:
    return sum(1 for v in rep.labels if pairing(h, rep.weights[v]) < 0)


def _shuffle_table(x, max_len):
    d = len(x)
    return {L: shuffles_of_length(x, L) for L in range(min(max_len, d * (d - 1) // 2) + 1)}


def trace_filtered_orbit(rep: Representation, h0: CartanElement) -> list[CartanElement]:
    """Weyl translates ``w . h0`` with ``w0 w`` a shuffle triple of total length ``dim H(h0 < 0)``."""
    if not h0.is_dominant():
        raise ValueError("H0 must be dominant")
    target = negative_weight_count(rep, h0)
    tables = [_shuffle_table(x, target) for x in h0.parts]
    out = []

    def rec(f, remaining, chosen):
        if f == len(tables):
            if remaining == 0:
                parts = []
                for x, p in zip(h0.parts, chosen):
                    w = compose(longest(len(x)), p)
                    parts.append(act_on_vector(w, x))
                out.append(CartanElement(h0.group, tuple(parts), h0.scalars))
            return
        for length, perms in tables[f].items():
            if length > remaining:
                break
            for p in perms:
                rec(f + 1, remaining - length, chosen + [p])

    rec(0, target, [])
    return out


def weyl_candidates(rep: Representation, adm: CandidateSet) -> CandidateSet:
    elems = []
    for h0 in adm.elements:
        elems.extend(trace_filtered_orbit(rep, h0))
    elems.sort(key=lambda h: h.flat)
    return CandidateSet("E", adm.dims, elems)


@dataclass
class CandidatePipeline:
    dims: tuple[int, int, int]
    plus: CandidateSet
    admissible: CandidateSet
    moved: CandidateSet


def candidate_pipeline(a: int, b: int, c: int) -> CandidatePipeline:
    rep = kronecker_rep(a, b, c)
    plus = tripartite_candidates(a, b, c)
    adm = admissible_candidates(rep, plus)
    return CandidatePipeline((a, b, c), plus, adm, weyl_candidates(rep, adm))


# -- bipartite closed form ---------------------------------------------------------


def bipartite_cone(a: int, b: int) -> ConeHRep:
    """``{(lam_A, lam_B) : lam_A dominant >= 0, lam_B = (lam_A, 0, ..., 0)}`` for a <= b."""
    if not (1 <= a <= b):
        raise ValueError("need 1 <= a <= b")
    n = a + b
    ineqs = []
    for i in range(a - 1):
        row = [0] * n
        row[i], row[i + 1] = 1, -1
        ineqs.append(tuple(row))
    row = [0] * n
    row[a - 1] = 1
    ineqs.append(tuple(row))
    eqs = []
    for i in range(b):
        row = [0] * n
        row[a + i] = 1
        if i < a:
            row[i] = -1
        eqs.append(tuple(row))
    return ConeHRep(n, eqs, ineqs)

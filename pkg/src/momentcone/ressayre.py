"""Tangent maps, determinant tests and the resulting inequality description."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polyhedral import ConeHRep, ConeVRep, dual_description, remove_redundant
from .repmodel import Representation, split
from .weightsys import CartanElement, Root, WeightVector, root_weight

PRIME = (1 << 61) - 1
SYMBOLIC_LIMIT = 12


class TraceViolationError(ValueError):
    """The tangent map is not square."""


class SymbolicSizeError(ValueError):
    """The matrix is too large for exact expansion."""


@dataclass
class TangentMatrix:
    """Square matrix of linear forms in the coordinates of ``H(H = 0)``.

    ``entries[r][c]`` maps a variable index to an integer coefficient; the
    variable ``k`` is the coordinate of the basis vector ``variables[k]``.
    """

    rows: list
    cols: list[Root]
    variables: list
    entries: list[list[dict[int, int]]]

    @property
    def size(self) -> int:
        return len(self.rows)

    def evaluate(self, point: Sequence[int], modulus: int | None = None):
        out = []
        for row in self.entries:
            vals = []
            for form in row:
                s = sum(c * point[k] for k, c in form.items())
                vals.append(s % modulus if modulus else s)
            out.append(vals)
        return out


def tangent_matrix(rep: Representation, h: CartanElement) -> TangentMatrix:
    sp = split(rep, h)
    if len(sp.neg) != len(sp.roots_neg):
        raise TraceViolationError(
            f"dim H(H<0) = {len(sp.neg)} but dim n_-(H<0) = {len(sp.roots_neg)}")
    rows = sorted(sp.neg)
    cols = sorted(sp.roots_neg, key=lambda r: (r.factor, r.i, r.j))
    variables = sorted(sp.zero)
    row_of = {u: k for k, u in enumerate(rows)}
    entries = [[{} for _ in cols] for _ in rows]
    for ci, root in enumerate(cols):
        for vi, v in enumerate(variables):
            for u, c in rep.lowering.get((root, v), ()):
                r = row_of.get(u)
                if r is None:
                    continue
                form = entries[r][ci]
                form[vi] = form.get(vi, 0) + c
                if form[vi] == 0:
                    del form[vi]
    return TangentMatrix(rows, cols, variables, entries)


# -- determinants --------------------------------------------------------------------


def det_mod(mat: list[list[int]], p: int = PRIME) -> int:
    """Determinant over the prime field by Gaussian elimination."""
    m = [list(r) for r in mat]
    n = len(m)
    det = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        pv = m[c][c] % p
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        prow = m[c]
        for r in range(c + 1, n):
            f = m[r][c] % p
            if f:
                f = f * inv % p
                row = m[r]
                for k in range(c + 1, n):
                    row[k] = (row[k] - f * prow[k]) % p
    return det % p


@dataclass(frozen=True)
class PitVerdict:
    nonzero: bool
    trials: int
    failure_bound: Fraction
    """Upper bound on the probability that a nonzero determinant went unnoticed."""

    @property
    def outcome(self) -> str:
        return "nonzero-certified" if self.nonzero else "zero-probable"


def candidate_seed(seed: int, key) -> int:
    digest = hashlib.sha256(f"{seed}|{key}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def det_nonzero_pit(m: TangentMatrix, trials: int = 2, seed: int = 0, key=None) -> PitVerdict:
    """Schwartz-Zippel test of the determinant polynomial over GF(2^61 - 1)."""
    k = m.size
    if k == 0:
        return PitVerdict(True, 0, Fraction(0))
    rng = random.Random(candidate_seed(seed, key if key is not None else (m.rows, m.cols)))
    nvars = len(m.variables)
    for t in range(1, trials + 1):
        point = [rng.randrange(PRIME) for _ in range(nvars)]
        if det_mod(m.evaluate(point, PRIME)):
            return PitVerdict(True, t, Fraction(0))
    return PitVerdict(False, trials, Fraction(k, PRIME) ** trials)


Monomial = tuple[int, ...]
Polynomial = dict[Monomial, int]


def _poly_mul_form(poly: Polynomial, form: dict[int, int]) -> Polynomial:
    out: Polynomial = {}
    for mono, c in poly.items():
        for var, d in form.items():
            key = tuple(sorted(mono + (var,)))
            out[key] = out.get(key, 0) + c * d
    return {m: c for m, c in out.items() if c}


def _poly_add(acc: Polynomial, other: Polynomial, sign: int):
    for mono, c in other.items():
        v = acc.get(mono, 0) + sign * c
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def det_symbolic(m: TangentMatrix, limit: int = SYMBOLIC_LIMIT) -> Polynomial:
    """Exact determinant as a sparse polynomial ``{sorted variable tuple: coefficient}``.

    Cofactor expansion along rows, memoized on the set of columns still free.
    """
    k = m.size
    if k > limit:
        raise SymbolicSizeError(f"matrix of size {k} exceeds the symbolic limit {limit}")
    entries = m.entries

    @lru_cache(maxsize=None)
    def minor(r: int, cols_mask: int) -> tuple:
        if r == k:
            return (((), 1),)
        acc: Polynomial = {}
        sign = 1
        for c in range(k):
            if not cols_mask >> c & 1:
                continue
            form = entries[r][c]
            if form:
                sub = dict(minor(r + 1, cols_mask & ~(1 << c)))
                if sub:
                    _poly_add(acc, _poly_mul_form(sub, form), sign)
            sign = -sign
        return tuple(sorted(acc.items()))

    return dict(minor(0, (1 << k) - 1))


def eval_poly(poly: Polynomial, point: Sequence[int], modulus: int | None = None) -> int:
    total = 0
    for mono, c in poly.items():
        term = c
        for v in mono:
            term *= point[v]
            if modulus:
                term %= modulus
        total += term
    return total % modulus if modulus else total


def poly_str(poly: Polynomial, names: Sequence[str]) -> str:
    if not poly:
        return "0"
    terms = []
    for mono, c in sorted(poly.items()):
        powers: dict[int, int] = {}
        for v in mono:
            powers[v] = powers.get(v, 0) + 1
        body = "*".join(names[v] + (f"^{e}" if e > 1 else "") for v, e in sorted(powers.items()))
        terms.append(f"{c}" if not body else (body if c == 1 else f"{c}*{body}"))
    return " + ".join(terms)


# -- weights --------------------------------------------------------------------------


def _zero_weight(rep: Representation) -> WeightVector:
    return WeightVector(tuple((0,) * d for d in rep.group.ranks), (0,) * rep.group.scalar_count)


def kappa(rep: Representation, h: CartanElement) -> WeightVector:
    """Sum of the weights of ``H(H<0)`` minus the sum of the roots of ``n_-(H<0)``."""
    sp = split(rep, h)
    if len(sp.neg) != len(sp.roots_neg):
        raise TraceViolationError("trace condition fails")
    total = _zero_weight(rep)
    for v in sp.neg:
        total = total + rep.weights[v]
    for root in sp.roots_neg:
        rw = root_weight(rep.group, root)
        total = total + WeightVector(tuple(tuple(-x for x in p) for p in rw.parts), rw.charges)
    return total


# -- Ressayre test and cone assembly -----------------------------------------------------

PIT_ONLY = "pit"
EXACT = "exact"


@dataclass
class RessayrePolicy:
    mode: str = PIT_ONLY
    trials: int = 2
    seed: int = 0
    symbolic_limit: int = SYMBOLIC_LIMIT


def determinant_nonzero(m: TangentMatrix, policy: RessayrePolicy, key=None) -> bool:
    verdict = det_nonzero_pit(m, policy.trials, policy.seed, key)
    if verdict.nonzero:
        return True
    if policy.mode == EXACT and m.size <= policy.symbolic_limit:
        return bool(det_symbolic(m, policy.symbolic_limit))
    return False


def is_ressayre(rep: Representation, h: CartanElement, policy: RessayrePolicy | None = None,
                check_admissible: bool = True) -> bool:
    from .candidates import is_admissible

    policy = policy or RessayrePolicy()
    if h.is_zero():
        raise ValueError("H must be nonzero")
    if check_admissible and not is_admissible(rep, h):
        return False
    try:
        m = tangent_matrix(rep, h)
    except TraceViolationError:
        return False
    return determinant_nonzero(m, policy, key=h.flat)


def trivial_inequalities(dims: Sequence[int]) -> list[tuple[int, ...]]:
    """Weyl chamber inequalities: consecutive differences and the last entry of each factor."""
    n = sum(dims)
    out = []
    pos = 0
    for d in dims:
        for i in range(d - 1):
            row = [0] * n
            row[pos + i], row[pos + i + 1] = 1, -1
            out.append(tuple(row))
        row = [0] * n
        row[pos + d - 1] = 1
        out.append(tuple(row))
        pos += d
    return out


def trace_equalities(dims: Sequence[int]) -> list[tuple[int, ...]]:
    n = sum(dims)
    offs = [sum(dims[:k]) for k in range(len(dims))]
    out = []
    for k in range(len(dims) - 1):
        row = [0] * n
        for i in range(dims[k]):
            row[offs[k] + i] = 1
        for i in range(dims[k + 1]):
            row[offs[k + 1] + i] = -1
        out.append(tuple(row))
    return out


def normal_of(h: CartanElement) -> tuple[int, ...]:
    """The functional ``lam -> (H, lam)`` on spectra, using ``|lam| = |lam_A|``."""
    z = h.scalars[0] if h.scalars else 0
    out = []
    for f, part in enumerate(h.parts):
        out.extend(x + (z if f == 0 else 0) for x in part)
    return tuple(out)


def cartan_of_normal(normal: Sequence[int], dims: Sequence[int]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Split a spectral normal into traceless parts and ``z``, scaled to primitive integers."""
    parts, pos, zsum = [], 0, Fraction(0)
    for d in dims:
        seg = [Fraction(x) for x in normal[pos:pos + d]]
        mean = sum(seg) / d
        parts.append([x - mean for x in seg])
        zsum += mean
        pos += d
    flat = [x for p in parts for x in p] + [zsum]
    from .linalg import clear_denominators

    ints = clear_denominators(flat)
    out, pos = [], 0
    for d in dims:
        out.append(tuple(ints[pos:pos + d]))
        pos += d
    return tuple(out), ints[-1]


def compute_hrep(rep: Representation, dims: Sequence[int], ressayre: Sequence[CartanElement]) -> ConeHRep:
    dims = tuple(dims)
    ineqs = trivial_inequalities(dims) + [normal_of(h) for h in ressayre]
    return ConeHRep(sum(dims), trace_equalities(dims), ineqs)


@dataclass
class Facet:
    parts: tuple[tuple[int, ...], ...]
    z: int
    normal: tuple[int, ...]
    contains_highest_weight: bool
    contains_origin: bool
    trivial: bool

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for p in self.parts for x in p) + (self.z,)

    @property
    def markers(self) -> tuple[str, ...]:
        out = ()
        if self.contains_origin:
            out += ("origin",)
        if self.contains_highest_weight:
            out += ("highest",)
        return out


def highest_weight_point(dims):
    return tuple(x for d in dims for x in (1,) + (0,) * (d - 1))


def origin_point(dims):
    """The maximally mixed spectra (tau_d, ...) scaled to integers."""
    from math import lcm

    m = lcm(*dims)
    return tuple(m // d for d in dims for _ in range(d))


def _lies_on(normal, point, equalities) -> bool:
    """The point is in the span of the cone and on the hyperplane of ``normal``."""
    on_span = all(sum(a * b for a, b in zip(e, point)) == 0 for e in equalities)
    return on_span and sum(a * b for a, b in zip(normal, point)) == 0


def make_facet(normal, dims, trivial_set, equalities=()) -> Facet:
    parts, z = cartan_of_normal(normal, dims)
    hw = _lies_on(normal, highest_weight_point(dims), equalities)
    og = _lies_on(normal, origin_point(dims), equalities)
    return Facet(parts, z, tuple(normal), hw, og, tuple(normal) in trivial_set)


def _prefer_trivial(normals, rays, dims):
    """Replace each facet normal by a trivial inequality defining the same facet, if there is one.

    Facet normals are only determined up to the equalities; when a padded
    factor forces entries to vanish, the chamber wall before the padding
    shows up in another form.  Facets are identified by their tight rays.
    """
    def key(a):
        return tuple(sum(x * y for x, y in zip(a, r)) == 0 for r in rays)

    by_key = {}
    for t in trivial_inequalities(dims):
        if all(sum(x * y for x, y in zip(t, r)) >= 0 for r in rays):
            by_key.setdefault(key(t), tuple(t))
    return [by_key.get(key(a), tuple(a)) for a in normals]


def normalized_ray(ray, dims) -> tuple[tuple[Fraction, ...], ...]:
    """Split a ray into per-factor spectra with trace one."""
    total = sum(ray[:dims[0]])
    out, pos = [], 0
    for d in dims:
        out.append(tuple(Fraction(x, total) for x in ray[pos:pos + d]))
        pos += d
    return tuple(out)


@dataclass
class ConeResult:
    dims: tuple[int, ...]
    hrep: ConeHRep
    vrep: ConeVRep
    facets: list[Facet] = field(default_factory=list)
    rays: list[tuple[int, ...]] = field(default_factory=list)


def cone_from_ressayre(dims, ressayre: Sequence[CartanElement], rep=None) -> ConeResult:
    dims = tuple(dims)
    h = compute_hrep(rep, dims, ressayre)
    v = dual_description(h)
    irred = remove_redundant(h, v, expected_dim=sum(dims) - (len(dims) - 1))
    trivial = {tuple(t) for t in ConeHRep(sum(dims), [], trivial_inequalities(dims)).inequalities}
    facets = [make_facet(n, dims, trivial, irred.equalities) for n in irred.inequalities]
    facets.sort(key=lambda f: f.flat)
    return ConeResult(dims, irred, v, facets, list(v.rays))


# -- end-to-end driver ---------------------------------------------------------------


def _check_chunk(args):
    dims, flats, policy = args
    from .repmodel import kronecker_rep
    from .weightsys import kronecker_group

    rep = kronecker_rep(*dims)
    group = kronecker_group(*dims)
    out = []
    for flat in flats:
        h = CartanElement.from_flat(group, flat)
        out.append(is_ressayre(rep, h, policy, check_admissible=False))
    return out


def _worker_count() -> int:
    import os

    try:
        return max(1, int(os.environ.get("MOMENTCONE_THREADS", "1")))
    except ValueError:
        return 1


def filter_ressayre(dims, candidates: Sequence[CartanElement], policy: RessayrePolicy,
                    workers: int | None = None) -> list[CartanElement]:
    """Ressayre elements among admissible candidates, in input order.

    Verdicts do not depend on scheduling because every candidate draws its
    random points from a seed derived from its own coordinates.
    """
    workers = workers or _worker_count()
    flats = [h.flat for h in candidates]
    if workers == 1 or len(flats) < 2 * workers:
        verdicts = _check_chunk((tuple(dims), flats, policy))
    else:
        from concurrent.futures import ProcessPoolExecutor

        size = -(-len(flats) // (4 * workers))
        chunks = [(tuple(dims), flats[i:i + size], policy) for i in range(0, len(flats), size)]
        verdicts = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_check_chunk, chunks):
                verdicts.extend(part)
    return [h for h, ok in zip(candidates, verdicts) if ok]


@dataclass
class KroneckerCone:
    dims: tuple[int, ...]
    mode: str
    stages: dict[str, tuple[int, int]]
    hrep: ConeHRep
    facets: list[Facet]
    rays: list[tuple[int, ...]]
    inequalities: list[CartanElement] = field(default_factory=list)


def _permute_coords(vec, dims_sorted, order):
    """Map a vector laid out in sorted factor order back to the original order."""
    offs = [sum(dims_sorted[:k]) for k in range(len(dims_sorted))]
    blocks = {order[k]: vec[offs[k]:offs[k] + dims_sorted[k]] for k in range(len(order))}
    return tuple(x for f in range(len(order)) for x in blocks[f])


def _pad_hrep(h: ConeHRep, dims_small, dims_big) -> ConeHRep:
    """Embed a cone by zero-padding the last factor and forcing the new entries to vanish."""
    extra = dims_big[-1] - dims_small[-1]
    pad = (0,) * extra
    n = sum(dims_big)
    eqs = [tuple(e) + pad for e in h.equalities]
    for k in range(extra):
        row = [0] * n
        row[n - extra + k] = 1
        eqs.append(tuple(row))
    return ConeHRep(n, eqs, [tuple(a) + pad for a in h.inequalities])


def kronecker_cone(a: int, b: int, c: int, policy: RessayrePolicy | None = None,
                   workers: int | None = None) -> KroneckerCone:
    """The moment cone of SU(a) x SU(b) x SU(c) x U(1) on C^a (x) C^b (x) C^c."""
    from .candidates import CandidateSet, bipartite_cone, candidate_pipeline
    from .repmodel import BIPARTITE, PAD, reduce_dims

    policy = policy or RessayrePolicy()
    red = reduce_dims(a, b, c)
    dims_sorted = red.dims
    stages: dict[str, tuple[int, int]] = {}
    ressayre: list[CartanElement] = []
    if red.mode == BIPARTITE:
        _, b2, c2 = dims_sorted
        inner = bipartite_cone(b2, c2)
        n = 1 + b2 + c2
        eqs = [(0,) + tuple(e) for e in inner.equalities]
        eqs.append((1,) + (-1,) * b2 + (0,) * c2)
        hs = ConeHRep(n, eqs, [(0,) + tuple(r) for r in inner.inequalities])
        full_dims = (1, b2, c2)
    else:
        work = dims_sorted
        pipe = candidate_pipeline(*work)
        for s in (pipe.plus, pipe.admissible, pipe.moved):
            stages[s.stage] = (s.total, s.up_to_perms)
        ressayre = filter_ressayre(work, pipe.moved.elements, policy, workers)
        ineq = CandidateSet("inequalities", work, ressayre)
        stages["inequalities"] = (ineq.total, ineq.up_to_perms)
        hs = compute_hrep(None, work, ressayre)
        full_dims = tuple(sorted((a, b, c)))
        if red.mode == PAD:
            hs = _pad_hrep(hs, work, full_dims)
    v = dual_description(hs)
    irred = remove_redundant(hs, v)
    order = red.order
    orig_dims = (a, b, c)
    normals = [_permute_coords(nv, full_dims, order) for nv in irred.inequalities]
    eqs = [_permute_coords(e, full_dims, order) for e in irred.equalities]
    rays = sorted(_permute_coords(r, full_dims, order) for r in v.rays)
    normals = _prefer_trivial(normals, rays, orig_dims)
    hrep = ConeHRep(sum(orig_dims), eqs, normals)
    trivial = {tuple(t) for t in ConeHRep(sum(orig_dims), [], trivial_inequalities(orig_dims)).inequalities}
    facets = sorted((make_facet(nv, orig_dims, trivial, hrep.equalities) for nv in hrep.inequalities),
                    key=lambda f: f.flat)
    from .candidates import subsystem_perm_group
    from .polyhedral import dedupe_up_to_perms

    stages["facets"] = (len(facets), len(dedupe_up_to_perms([f.flat for f in facets],
                                                            subsystem_perm_group(orig_dims, 1))))
    stages["rays"] = (len(rays), len(dedupe_up_to_perms(rays, subsystem_perm_group(orig_dims))))
    return KroneckerCone(orig_dims, red.mode, stages, hrep, facets, rays, ressayre)

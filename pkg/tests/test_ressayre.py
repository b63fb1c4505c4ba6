import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from momentcone.candidates import candidate_pipeline
from momentcone.polyhedral import contains, dimension
from momentcone.repmodel import kronecker_rep, split
from momentcone.ressayre import (
    PRIME, RessayrePolicy, SymbolicSizeError, TangentMatrix, TraceViolationError, cartan_of_normal,
    compute_hrep, det_mod, det_nonzero_pit, det_symbolic, eval_poly, is_ressayre, kappa, kronecker_cone,
    normal_of, tangent_matrix,
)
from momentcone.weightsys import CartanElement, WeightVector, kronecker_group


def polygonal(d, z=None):
    g = kronecker_group(d, d, d)
    one = (1 - d,) + (1,) * (d - 1)
    return CartanElement(g, (one, one, (d - 1,) + (-1,) * (d - 1)), (d - 1 if z is None else z,))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_polygonal_tangent_matrix_is_diagonal(d):
    rep = kronecker_rep(d, d, d)
    m = tangent_matrix(rep, polygonal(d))
    assert m.size == d - 1
    psi = m.variables.index((0, 0, 0))
    for r in range(d - 1):
        for c in range(d - 1):
            assert m.entries[r][c] == ({psi: 1} if r == c else {})
    assert det_symbolic(m) == {(psi,) * (d - 1): 1}
    assert det_nonzero_pit(m).nonzero
    assert is_ressayre(rep, polygonal(d))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_polygonal_kappa(d):
    k = kappa(kronecker_rep(d, d, d), polygonal(d))
    e1 = (d - 1,) + (0,) * (d - 1)
    assert k.parts == (e1, e1, e1)
    assert k.charges == (d - 1,)


def test_sibling_with_wrong_z_fails_trace():
    d = 3
    rep = kronecker_rep(d, d, d)
    ones = (1,) * (d - 1)
    h0 = CartanElement(kronecker_group(d, d, d), (ones + (1 - d,), ones + (1 - d,), (d - 1,) + (-1,) * (d - 1)), (-1,))
    assert len(split(rep, h0).neg) == 2 * (d - 1) ** 2 + d
    assert not is_ressayre(rep, h0)
    with pytest.raises(TraceViolationError):
        tangent_matrix(rep, h0)


def test_empty_matrix():
    rep = kronecker_rep(2, 2, 2)
    h = CartanElement(kronecker_group(2, 2, 2), ((0, 0), (0, 0), (0, 0)), (1,))
    m = tangent_matrix(rep, h)
    assert m.size == 0
    assert det_symbolic(m) == {(): 1}
    assert det_nonzero_pit(m).nonzero
    assert kappa(rep, h) == WeightVector(((0, 0), (0, 0), (0, 0)), (0,))


def _linear_matrix(k, nvars, rng):
    entries = [[{v: rng.randint(-3, 3) for v in rng.sample(range(nvars), 2)} for _ in range(k)] for _ in range(k)]
    entries = [[{v: c for v, c in form.items() if c} for form in row] for row in entries]
    return TangentMatrix(list(range(k)), list(range(k)), list(range(nvars)), entries)


def test_zero_matrix_is_zero_probable():
    m = TangentMatrix([0, 1], [0, 1], [0], [[{}, {}], [{}, {}]])
    v = det_nonzero_pit(m, trials=3)
    assert not v.nonzero and v.outcome == "zero-probable"
    assert v.failure_bound == Fraction(2, PRIME) ** 3


@pytest.mark.parametrize("seed", range(5))
def test_symbolic_matches_sympy_and_evaluations(seed):
    rng = random.Random(seed)
    m = _linear_matrix(3, 4, rng)
    xs = sympy.symbols("x0:4")
    ref = sympy.Matrix([[sum(c * xs[v] for v, c in form.items()) for form in row] for row in m.entries]).det()
    poly = det_symbolic(m)
    mine = sum(c * sympy.Mul(*[xs[v] for v in mono]) for mono, c in poly.items())
    assert sympy.expand(mine - ref) == 0
    for _ in range(5):
        point = [rng.randrange(PRIME) for _ in range(4)]
        assert eval_poly(poly, point, PRIME) == det_mod(m.evaluate(point, PRIME))


def test_symbolic_size_guard():
    m = _linear_matrix(13, 3, random.Random(0))
    with pytest.raises(SymbolicSizeError):
        det_symbolic(m)


@given(st.lists(st.lists(st.integers(-50, 50), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_mod_matches_exact_determinant(rows):
    assert det_mod(rows) == int(sympy.Matrix(rows).det()) % PRIME


def _ressayre_333():
    pipe = candidate_pipeline(3, 3, 3)
    rep = kronecker_rep(3, 3, 3)
    return rep, [h for h in pipe.moved.elements if is_ressayre(rep, h, check_admissible=False)]


@pytest.fixture(scope="module")
def ressayre_333():
    return _ressayre_333()


def test_inequality_count_333(ressayre_333):
    from momentcone.candidates import CandidateSet

    _, ok = ressayre_333
    s = CandidateSet("inequalities", (3, 3, 3), ok)
    assert (s.total, s.up_to_perms) == (114, 25)


def test_determinant_has_torus_weight_kappa(ressayre_333):
    """Each monomial of the determinant uses variables whose weights add up to kappa."""
    rep, ok = ressayre_333
    for h in ok:
        m = tangent_matrix(rep, h)
        if m.size > 6:
            continue
        k = kappa(rep, h)
        for mono in det_symbolic(m):
            total = WeightVector(tuple((0,) * 3 for _ in range(3)), (0,))
            for v in mono:
                total = total + rep.weights[m.variables[v]]
            assert total == k


def _lower(rep, root, psi):
    out = {}
    for v, c in psi.items():
        for u, coeff in rep.lowering.get((root, v), ()):
            out[u] = out.get(u, 0) + c * coeff
    return out


def test_determinant_is_invariant_under_unipotent_stabilizer(ressayre_333):
    rep, ok = ressayre_333
    rng = random.Random(1)
    for h in ok[::3]:
        m = tangent_matrix(rep, h)
        sp = split(rep, h)
        for root in sp.roots_zero[:3]:
            psi = {v: rng.randrange(PRIME) for v in m.variables}
            t = rng.randrange(PRIME)
            moved = dict(psi)
            for u, c in _lower(rep, root, psi).items():
                moved[u] = moved.get(u, 0) + t * c
            before = det_mod(m.evaluate([psi[v] for v in m.variables], PRIME))
            after = det_mod(m.evaluate([moved[v] % PRIME for v in m.variables], PRIME))
            assert before == after


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**63), st.integers(1, 3))
def test_pit_verdict_is_seed_independent_for_nonzero(seed, trials):
    m = tangent_matrix(kronecker_rep(3, 3, 3), polygonal(3))
    assert det_nonzero_pit(m, trials, seed).nonzero


def test_normal_round_trip():
    dims = (4, 4, 4)
    h = polygonal(4, z=3)
    n = normal_of(h)
    parts, z = cartan_of_normal(n, dims)
    assert parts == h.parts and z == 3


def test_hrep_contains_highest_weight(ressayre_333):
    _, ok = ressayre_333
    h = compute_hrep(None, (3, 3, 3), ok)
    assert contains(h, (1, 0, 0, 1, 0, 0, 1, 0, 0))
    assert not contains(h, (1, 0, 0, 1, 0, 0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)))


@pytest.mark.parametrize("dims,facets,rays", [
    ((2, 2, 2), (6, 2), (5, 3)),
    ((3, 3, 3), (45, 10), (33, 11)),
])
def test_small_cones(dims, facets, rays):
    cone = kronecker_cone(*dims)
    assert cone.stages["facets"] == facets
    assert cone.stages["rays"] == rays
    assert dimension(cone.hrep) == sum(dims) - 2


def test_exact_policy_agrees_with_pit():
    a = kronecker_cone(2, 2, 2)
    b = kronecker_cone(2, 2, 2, policy=RessayrePolicy(mode="exact"))
    assert a.stages == b.stages


@pytest.mark.parametrize("dims", [(2, 2, 3), (2, 2, 5), (3, 2, 2), (1, 2, 3), (2, 3, 3)])
def test_other_dimensions_run(dims):
    cone = kronecker_cone(*dims)
    top = tuple(x for d in dims for x in (1,) + (0,) * (d - 1))
    assert contains(cone.hrep, top)
    assert cone.dims == dims


def test_padded_cone_facets():
    padded = kronecker_cone(2, 2, 5)
    native = kronecker_cone(2, 2, 4)
    assert padded.stages["facets"] == native.stages["facets"]
    # The maximally mixed point violates the padding equality, so no facet passes through it.
    assert not any(f.contains_origin for f in padded.facets)
    wall = (0, 0, 0, 0, 0, 0, 0, 1, -1)
    assert any(f.normal == wall and f.trivial for f in padded.facets)

from itertools import combinations, product

import pytest

from momentcone.horncone import (
    SubsetTriple, complement, free_positions, horn_cartan, horn_condition, horn_membership, horn_sets,
    horn_tangent_det, horn_tangent_det_symbolic, horn_trace, kappa_ijk, lambda_of_subset,
)
from momentcone.repmodel import horn_rep
from momentcone.ressayre import kappa, tangent_matrix

ODD = (1, 3, 5)


def trace_triples(d, r):
    subs = list(combinations(range(1, d + 1), r))
    for I, J, K in product(subs, repeat=3):
        t = SubsetTriple(d, I, J, K)
        if horn_trace(t):
            yield t


def test_lambda_of_subset():
    assert lambda_of_subset(ODD, 6) == (3, 2, 1)
    assert lambda_of_subset((2, 4, 6), 6) == (2, 1, 0)
    assert lambda_of_subset((1, 2), 5) == (3, 3)
    assert complement(ODD, 6) == (2, 4, 6)


def test_trace_examples():
    assert horn_trace(SubsetTriple(6, ODD, ODD, ODD))
    assert horn_trace(SubsetTriple(2, (1,), (1,), (2,)))
    assert not horn_trace(SubsetTriple(2, (1,), (1,), (1,)))


def test_subset_validation():
    with pytest.raises(ValueError):
        SubsetTriple(3, (2, 1), (1, 2), (1, 2))
    with pytest.raises(ValueError):
        SubsetTriple(3, (1, 2, 3), (1, 2, 3), (1, 2, 3))


def test_small_horn_sets():
    assert len(horn_sets(2, 1)) == 3
    assert len(horn_sets(3, 1)) == 6 and len(horn_sets(3, 2)) == 6
    assert SubsetTriple(6, ODD, ODD, ODD) in horn_sets(6, 3)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_horn_sets_equal_trace_and_condition(d):
    for r in range(1, d):
        got = {t for t in trace_triples(d, r) if horn_condition(t)}
        assert got == set(horn_sets(d, r))


def test_membership_examples():
    assert horn_membership((1, 0), (1, 0), (-1, -1))[0]
    assert horn_membership((0, 0, 0), (0, 0, 0), (0, 0, 0))[0]
    # A = B = diag(1, 0) and C = diag(0, -2) add up to zero.
    assert horn_membership((1, 0), (1, 0), (0, -2))[0]
    ok, reason = horn_membership((1, 0), (1, 0), (1, -3))
    assert not ok and "non-positive" in reason
    assert horn_membership((2, 0), (0, 0), (0, -2))[0]
    ok, reason = horn_membership((2, 0), (0, 0), (-1, -1))
    assert not ok and "I=(2,), J=(1,), K=(1,)" in reason
    assert not horn_membership((1, 0), (0, 0), (0, -2))[0]


def test_condition_for_odd_triple():
    assert horn_condition(SubsetTriple(6, ODD, ODD, ODD))


def test_kappa_blocks_for_odd_triple():
    first, second = kappa_ijk(SubsetTriple(6, ODD, ODD, ODD))
    assert first.parts == ((3, 2, 1), (3, 2, 1), (-3, -4, -5))
    assert second.parts == ((2, 1, 0), (2, 1, 0), (-1, -2, -3))


def test_tangent_determinant_on_horn_sets():
    for t in horn_sets(2, 1):
        assert horn_tangent_det(t).nonzero
        assert horn_tangent_det_symbolic(t)
    assert horn_tangent_det(SubsetTriple(6, ODD, ODD, ODD)).nonzero


def test_tangent_determinant_separates_at_four():
    d, r = 4, 2
    members = horn_sets(d, r)
    outsiders = [t for t in trace_triples(d, r) if t not in members]
    assert outsiders
    for t in trace_triples(d, r):
        assert horn_tangent_det(t).nonzero == (t in members)


def test_free_positions_count_is_partition_size():
    for I in combinations(range(1, 6), 2):
        assert len(free_positions(I, 5)) == sum(lambda_of_subset(I, 5))


@pytest.mark.parametrize("d", [3, 4])
def test_kappa_agrees_with_general_formula(d):
    """kappa_ijk restricted to the I and I^c coordinates matches the general weight computation."""
    rep = horn_rep(d)
    for r in range(1, d):
        for t in sorted(horn_sets(d, r), key=lambda t: (t.I, t.J, t.K)):
            general = kappa(rep, horn_cartan(t))
            first, second = kappa_ijk(t)
            for f, s in enumerate(t.subsets()):
                comp = complement(s, d)
                assert tuple(general.parts[f][i - 1] for i in s) == first.parts[f]
                assert tuple(general.parts[f][i - 1] for i in comp) == second.parts[f]


def test_general_tangent_map_matches_horn_matrix_size():
    rep = horn_rep(4)
    for t in horn_sets(4, 2):
        assert tangent_matrix(rep, horn_cartan(t)).size > 0

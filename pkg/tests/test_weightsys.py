from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from momentcone.weightsys import (
    CartanElement, InvalidGroupError, WeightVector, WeylElement, act_on_vector, build_group, compose,
    horn_group, invert, kronecker_group, longest, pairing, permutation_length, shuffles_of_length,
    weyl_act,
)


def polygonal(d):
    g = kronecker_group(d, d, d)
    one = (1 - d,) + (1,) * (d - 1)
    return CartanElement(g, (one, one, (d - 1,) + (-1,) * (d - 1)), (d - 1,))


def cyclic_shift(d):
    """1 -> d and k -> k - 1, written 0-based."""
    return tuple([d - 1] + list(range(d - 1)))


def test_root_counts():
    g = build_group(["SU(2)", "SU(2)", "SU(2)", "U(1)"])
    assert g.rank == 4 and len(g.positive_roots) == 3
    g = build_group(["SU(4)"] * 3 + ["U(1)"])
    assert g.rank == 10 and len(g.positive_roots) == 18
    g = horn_group(3)
    assert g.rank == 9 and len(g.positive_roots) == 9


def test_rank_zero_factor_rejected():
    with pytest.raises(InvalidGroupError):
        build_group(["SU(0)"])


def test_su_part_must_be_traceless():
    with pytest.raises(ValueError):
        CartanElement(kronecker_group(2, 2, 2), ((1, 0), (0, 0), (0, 0)), (0,))


def test_pairing_examples():
    g = kronecker_group(4, 4, 4)
    h = CartanElement(g, ((-3, 1, 1, 1), (-3, 1, 1, 1), (3, -1, -1, -1)), (3,))
    q = Fraction(1, 4)
    lam = WeightVector.balanced([(q,) * 4, (q,) * 4, (1, 0, 0, 0)])
    assert pairing(h, lam) == 6
    top = WeightVector.balanced([(1, 0, 0, 0)] * 3)
    assert pairing(h, top) == 0
    assert pairing(CartanElement.from_flat(g, (0,) * 13), lam) == 0


def test_pairing_shape_mismatch():
    h = CartanElement.from_flat(kronecker_group(2, 2, 2), (0,) * 7)
    with pytest.raises(ValueError):
        pairing(h, WeightVector.balanced([(1, 0)] * 2))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_weyl_action_produces_polygonal_element(d):
    g = kronecker_group(d, d, d)
    ones = (1,) * (d - 1)
    h0 = CartanElement(g, (ones + (1 - d,), ones + (1 - d,), (d - 1,) + (-1,) * (d - 1)), (d - 1,))
    w0 = longest(d)
    w = WeylElement((w0, w0, compose(w0, cyclic_shift(d))))
    assert weyl_act(w, h0) == polygonal(d)
    ident = tuple(range(d))
    assert weyl_act(WeylElement((ident,) * 3), h0) == h0


def test_permutation_lengths():
    assert permutation_length((0, 1, 2, 3)) == 0
    assert permutation_length(longest(4)) == 6
    for d in range(2, 7):
        assert permutation_length(cyclic_shift(d)) == d - 1


def test_shuffle_examples():
    assert shuffles_of_length((2, 2, 2), 0) == [(0, 1, 2)]
    assert shuffles_of_length((1, 0), 1) == [(1, 0)]
    x = (1, 1, 0)
    expected = {p for p in permutations(range(3)) if permutation_length(p) == 2 and p[0] < p[1]}
    assert set(shuffles_of_length(x, 2)) == expected


def _brute_shuffles(x, length):
    out = set()
    for p in permutations(range(len(x))):
        keeps_order = all(p[i] < p[j] for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] == x[j])
        if keeps_order and permutation_length(p) == length:
            out.add(p)
    return out


@given(st.lists(st.integers(0, 2), min_size=1, max_size=5), st.integers(0, 10))
def test_shuffles_match_brute_force(entries, length):
    x = tuple(sorted(entries, reverse=True))
    assert set(shuffles_of_length(x, length)) == _brute_shuffles(x, length)


def test_shuffles_require_dominant_input():
    with pytest.raises(ValueError):
        shuffles_of_length((0, 1), 0)


@given(st.permutations(range(5)), st.permutations(range(5)), st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_action_is_a_group_action(p, q, x):
    p, q = tuple(p), tuple(q)
    assert act_on_vector(compose(p, q), x) == act_on_vector(p, act_on_vector(q, x))
    assert act_on_vector(invert(p), act_on_vector(p, x)) == tuple(x)


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_pairing_is_weyl_invariant(p, q):
    g = kronecker_group(4, 4, 4)
    h = polygonal(4)
    lam = WeightVector.balanced([(3, 1, 0, 0), (2, 2, 0, 0), (4, 0, 0, 0)])
    w = WeylElement((tuple(p), tuple(q), tuple(p)))
    moved = WeightVector(tuple(act_on_vector(pp, x) for pp, x in zip(w.perms, lam.parts)), lam.charges)
    assert pairing(weyl_act(w, h), moved) == pairing(h, lam)
    assert weyl_act(w, h).group == g

import pytest

from momentcone.repmodel import BIPARTITE, NATIVE, PAD, PROJECT, horn_rep, kronecker_rep, reduce_dims, split
from momentcone.weightsys import CartanElement, Root, kronecker_group


def test_kronecker_sizes():
    rep = kronecker_rep(2, 2, 2)
    assert len(rep.labels) == 8
    assert len({tuple(rep.weights[v].parts) for v in rep.labels}) == 8
    assert len(kronecker_rep(4, 4, 4).labels) == 64


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 3, 4), (3, 3, 3)])
def test_weights_are_additive(dims):
    assert kronecker_rep(*dims).check_weight_additivity()


def test_horn_rep():
    assert len(horn_rep(2).labels) == 8
    assert horn_rep(3).check_weight_additivity()


@pytest.mark.parametrize("d", [2, 3, 4])
def test_lowering_in_third_factor(d):
    rep = kronecker_rep(d, d, d)
    for k in range(1, d):
        assert rep.lowering[(Root(2, k, 0), (0, 0, 0))] == [((0, 0, k), 1)]


def test_split_of_polygonal_element_at_two():
    rep = kronecker_rep(2, 2, 2)
    h = CartanElement(kronecker_group(2, 2, 2), ((-1, 1), (-1, 1), (1, -1)), (1,))
    sp = split(rep, h)
    assert sp.neg == [(0, 0, 1)]
    assert set(sp.zero) == {(0, 0, 0), (0, 1, 1), (1, 0, 1)}
    assert sp.roots_neg == [Root(2, 1, 0)]
    assert sp.trace_holds


def test_split_of_zero():
    rep = kronecker_rep(2, 3, 2)
    sp = split(rep, CartanElement.from_flat(kronecker_group(2, 3, 2), (0,) * 8))
    assert sorted(sp.zero) == sorted(rep.labels) and not sp.neg and not sp.pos


def test_reduce_dims():
    assert reduce_dims(2, 2, 5).dims == (2, 2, 4) and reduce_dims(2, 2, 5).mode == PAD
    r = reduce_dims(3, 2, 2)
    assert r.dims == (2, 2, 3) and r.mode == PROJECT and r.order == (1, 2, 0)
    assert reduce_dims(1, 3, 4).mode == BIPARTITE
    assert reduce_dims(2, 2, 4).mode == NATIVE
    with pytest.raises(ValueError):
        reduce_dims(0, 2, 2)

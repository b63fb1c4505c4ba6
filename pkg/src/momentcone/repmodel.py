"""Weight-basis models of the Kronecker and Horn representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable

from .weightsys import (CartanElement, GroupData, Root, WeightVector, horn_group, kronecker_group, pairing,
                        root_weight)

Label = Hashable


@dataclass
class Representation:
    """A representation given by a weight basis and the action of the negative root vectors.

    ``lowering[(root, v)]`` lists the terms ``(u, c)`` of ``pi(E_root) v``;
    missing keys mean the root vector annihilates ``v``.
    """

    group: GroupData
    labels: list[Label]
    weights: dict[Label, WeightVector]
    lowering: dict[tuple[Root, Label], list[tuple[Label, int]]] = field(default_factory=dict)
    name: str = ""

    def __len__(self):
        return len(self.labels)

    def check_weight_additivity(self) -> bool:
        for (root, v), terms in self.lowering.items():
            expected = self.weights[v] + root_weight(self.group, root)
            for u, c in terms:
                if self.weights[u] != _as_weight(expected, self.weights[u]):
                    return False
                if not isinstance(c, int):
                    return False
        return True


def _as_weight(w: WeightVector, like: WeightVector) -> WeightVector:
    return WeightVector(tuple(tuple(type(b)(a) if not isinstance(b, int) else a for a, b in zip(p, q))
                              for p, q in zip(w.parts, like.parts)), w.charges)


def _unit(d: int, i: int, scale: int = 1) -> tuple[int, ...]:
    v = [0] * d
    v[i] = scale
    return tuple(v)


def kronecker_rep(a: int, b: int, c: int) -> Representation:
    """C^a (x) C^b (x) C^c with basis labels (i, j, k), 0-based."""
    if min(a, b, c) < 1:
        raise ValueError("dimensions must be positive")
    dims = (a, b, c)
    group = kronecker_group(a, b, c)
    labels = list(product(range(a), range(b), range(c)))
    weights = {lab: WeightVector(tuple(_unit(d, x) for d, x in zip(dims, lab)), (1,)) for lab in labels}
    lowering = {}
    for root in group.negative_roots:
        f, i, j = root.factor, root.i, root.j
        # E_{e_i - e_j} sends e_j to e_i in factor f.
        for lab in labels:
            if lab[f] == j:
                tgt = list(lab)
                tgt[f] = i
                lowering[(root, lab)] = [(tuple(tgt), 1)]
    return Representation(group, labels, weights, lowering, name=f"kronecker{dims}")


def horn_rep(d: int) -> Representation:
    """gl(d) + gl(d) under (g, h, k).(x, y) = (g x k^-1, h y k^-1).

    Basis labels are ``(block, i, j)`` for the matrix unit ``E_ij`` of the
    given block; its weight is ``(e_i, 0, -e_j)`` or ``(0, e_i, -e_j)``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    group = horn_group(d)
    zero = (0,) * d
    labels = [(blk, i, j) for blk in (0, 1) for i in range(d) for j in range(d)]
    weights = {}
    for blk, i, j in labels:
        left = [zero, zero]
        left[blk] = _unit(d, i)
        weights[(blk, i, j)] = WeightVector((left[0], left[1], _unit(d, j, -1)), ())
    lowering = {}
    for root in group.negative_roots:
        f, hi, lo = root.factor, root.i, root.j
        for blk, i, j in labels:
            if f == blk and i == lo:
                # left multiplication by E_{hi,lo}
                lowering[(root, (blk, i, j))] = [((blk, hi, j), 1)]
            elif f == 2 and j == hi:
                # x -> -x E_{hi,lo}
                lowering[(root, (blk, i, j))] = [((blk, i, lo), -1)]
    return Representation(group, labels, weights, lowering, name=f"horn({d})")


@dataclass
class HSplit:
    neg: list[Label]
    zero: list[Label]
    pos: list[Label]
    roots_neg: list[Root]
    roots_zero: list[Root]

    @property
    def trace_holds(self) -> bool:
        return len(self.neg) == len(self.roots_neg)


def split(rep: Representation, h: CartanElement) -> HSplit:
    if h.group.ranks != rep.group.ranks or len(h.scalars) != rep.group.scalar_count:
        raise ValueError("Cartan element does not belong to the representation's group")
    neg, zero, pos = [], [], []
    for lab in rep.labels:
        v = pairing(h, rep.weights[lab])
        (neg if v < 0 else zero if v == 0 else pos).append(lab)
    roots_neg, roots_zero = [], []
    for root in rep.group.negative_roots:
        v = h.root_value(root)
        if v < 0:
            roots_neg.append(root)
        elif v == 0:
            roots_zero.append(root)
    return HSplit(neg, zero, pos, roots_neg, roots_zero)


PAD = "pad"
PROJECT = "project"
NATIVE = "native"
BIPARTITE = "bipartite"


@dataclass(frozen=True)
class Reduction:
    dims: tuple[int, int, int]
    mode: str
    order: tuple[int, int, int]
    """``order[k]`` is the original factor placed at position ``k``."""


def reduce_dims(a: int, b: int, c: int) -> Reduction:
    """Sort the local dimensions and decide how the cone relates to C(a, b, min(c, ab)).

    Modes: ``bipartite`` (smallest dimension is 1), ``pad`` (c > ab; compute
    at c = ab and pad lambda_C with zeros), ``project`` (c < ab) and
    ``native`` (c == ab).
    """
    dims = (a, b, c)
    if min(dims) < 1:
        raise ValueError("dimensions must be positive")
    order = tuple(sorted(range(3), key=lambda k: (dims[k], k)))
    a2, b2, c2 = (dims[k] for k in order)
    if a2 == 1:
        return Reduction((a2, b2, c2), BIPARTITE, order)
    if c2 > a2 * b2:
        return Reduction((a2, b2, a2 * b2), PAD, order)
    if c2 < a2 * b2:
        return Reduction((a2, b2, c2), PROJECT, order)
    return Reduction((a2, b2, c2), NATIVE, order)

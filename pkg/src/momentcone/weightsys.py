"""Root data and Weyl group conventions for products of SU(d), U(d) and U(1).

Cartan elements are stored in full coordinates: ``d`` integers per SU/U
factor (summing to zero for SU) followed by one integer per scalar circle.
Weights carry one integer vector per factor plus one charge per scalar; for
SU factors only the traceless part of a weight vector matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from math import gcd
from typing import Iterator, Sequence

SU = "SU"
U = "U"


class InvalidGroupError(ValueError):
    pass


@dataclass(frozen=True)
class Root:
    """The root ``e_i - e_j`` of factor ``factor`` (0-based indices)."""

    factor: int
    i: int
    j: int

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def negate(self) -> "Root":
        return Root(self.factor, self.j, self.i)


@dataclass(frozen=True)
class GroupData:
    factors: tuple[tuple[str, int], ...]
    scalar_count: int = 0

    def __post_init__(self):
        for kind, d in self.factors:
            if kind not in (SU, U):
                raise InvalidGroupError(f"unknown factor kind {kind!r}")
            if d < 1:
                raise InvalidGroupError(f"factor rank must be >= 1, got {d}")
        if self.scalar_count < 0:
            raise InvalidGroupError("negative number of scalar factors")

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.factors)

    @property
    def rank(self) -> int:
        """Dimension of the maximal torus."""
        return sum(d - 1 if kind == SU else d for kind, d in self.factors) + self.scalar_count

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(Root(f, i, j) for f, (_, d) in enumerate(self.factors)
                     for i in range(d) for j in range(i + 1, d))

    @cached_property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(r.negate() for r in self.positive_roots)

    @property
    def cartan_length(self) -> int:
        return sum(self.ranks) + self.scalar_count

    def offsets(self) -> list[int]:
        out, pos = [], 0
        for d in self.ranks:
            out.append(pos)
            pos += d
        return out


def build_group(spec: Sequence) -> GroupData:
    """Build a group from descriptors like ``["SU(2)", "SU(2)", "U(1)"]``.

    A bare ``"U(1)"`` entry counts as a scalar circle; pass ``("U", 1)`` for
    a genuine one-dimensional unitary factor.
    """
    factors = []
    scalars = 0
    for item in spec:
        if isinstance(item, str):
            kind, _, rest = item.partition("(")
            d = int(rest.rstrip(")"))
            if kind == U and d == 1:
                scalars += 1
                continue
            factors.append((kind, d))
        else:
            kind, d = item
            factors.append((kind, int(d)))
    return GroupData(tuple(factors), scalars)


def kronecker_group(*dims: int) -> GroupData:
    return GroupData(tuple((SU, d) for d in dims), 1)


def horn_group(d: int) -> GroupData:
    return GroupData(((U, d), (U, d), (U, d)), 0)


@dataclass(frozen=True)
class CartanElement:
    group: GroupData
    parts: tuple[tuple[int, ...], ...]
    scalars: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.parts) != len(self.group.factors) or len(self.scalars) != self.group.scalar_count:
            raise ValueError("Cartan element does not match the group shape")
        for (kind, d), h in zip(self.group.factors, self.parts):
            if len(h) != d:
                raise ValueError("Cartan element does not match the group shape")
            if kind == SU and sum(h) != 0:
                raise ValueError(f"SU component {h} is not traceless")

    @classmethod
    def from_flat(cls, group: GroupData, flat: Sequence[int]) -> "CartanElement":
        parts, pos = [], 0
        for d in group.ranks:
            parts.append(tuple(flat[pos:pos + d]))
            pos += d
        return cls(group, tuple(parts), tuple(flat[pos:]))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for h in self.parts for x in h) + tuple(self.scalars)

    def is_zero(self) -> bool:
        return not any(self.flat)

    def canonical(self) -> "CartanElement":
        """Divide by the gcd of all entries; orientation is kept."""
        g = 0
        for x in self.flat:
            g = gcd(g, x)
        if g == 0:
            raise ValueError("the zero element has no canonical form")
        return CartanElement.from_flat(self.group, [x // g for x in self.flat])

    def is_dominant(self) -> bool:
        return all(all(h[i] >= h[i + 1] for i in range(len(h) - 1)) for h in self.parts)

    def root_value(self, root: Root) -> int:
        h = self.parts[root.factor]
        return h[root.i] - h[root.j]

    def __str__(self):
        inner = ", ".join("(" + ",".join(str(x) for x in h) + ")" for h in self.parts)
        if self.scalars:
            inner += ", " + ", ".join(str(z) for z in self.scalars)
        return f"({inner})"


@dataclass(frozen=True)
class WeightVector:
    parts: tuple[tuple, ...]
    charges: tuple = ()

    @classmethod
    def balanced(cls, parts: Sequence[Sequence]) -> "WeightVector":
        """A dual point with equal trace on every factor; the charge is that trace."""
        parts = tuple(tuple(Fraction(x) for x in p) for p in parts)
        traces = {sum(p) for p in parts}
        if len(traces) > 1:
            raise ValueError(f"factors have unequal traces {sorted(traces)}")
        return cls(parts, (traces.pop() if traces else Fraction(0),))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(tuple(a + b for a, b in zip(p, q)) for p, q in zip(self.parts, other.parts)),
                            tuple(a + b for a, b in zip(self.charges, other.charges)))


def root_weight(group: GroupData, root: Root) -> WeightVector:
    parts = []
    for f, d in enumerate(group.ranks):
        v = [0] * d
        if f == root.factor:
            v[root.i] += 1
            v[root.j] -= 1
        parts.append(tuple(v))
    return WeightVector(tuple(parts), (0,) * group.scalar_count)


def pairing(h: CartanElement, lam: WeightVector):
    if len(lam.parts) != len(h.parts) or len(lam.charges) != len(h.scalars):
        raise ValueError("weight and Cartan element belong to different groups")
    total = 0
    for hf, lf in zip(h.parts, lam.parts):
        if len(hf) != len(lf):
            raise ValueError("weight and Cartan element belong to different groups")
        total += sum(a * b for a, b in zip(hf, lf))
    total += sum(z * q for z, q in zip(h.scalars, lam.charges))
    return total


def weight_functional(group: GroupData, lam: WeightVector) -> tuple:
    """Coordinates of a weight as a functional on the Cartan, SU parts made traceless.

    SU parts are scaled by ``d`` (an invertible change of coordinates) so that
    integer weights stay integral; ranks of sets of weights are unaffected.
    """
    out = []
    for (kind, d), lf in zip(group.factors, lam.parts):
        if kind == SU:
            s = sum(lf)
            out.extend(d * x - s for x in lf)
        else:
            out.extend(lf)
    out.extend(lam.charges)
    return tuple(out)


# -- Weyl group ----------------------------------------------------------------

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """One permutation per factor; ``perms[f][i]`` is the image of index ``i``."""

    perms: tuple[Permutation, ...]

    def __post_init__(self):
        for p in self.perms:
            if sorted(p) != list(range(len(p))):
                raise ValueError(f"{p} is not a permutation")

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(invert(p) for p in self.perms))

    def compose(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(compose(p, q) for p, q in zip(self.perms, other.perms)))


def invert(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p o q)(i) = p(q(i))``."""
    return tuple(p[qi] for qi in q)


def longest(d: int) -> Permutation:
    return tuple(range(d - 1, -1, -1))


def act_on_vector(p: Permutation, x: Sequence) -> tuple:
    """``w . x`` with ``w . e_i = e_{w(i)}``, i.e. ``(w . x)[w(i)] = x[i]``."""
    out = [None] * len(x)
    for i, pi in enumerate(p):
        out[pi] = x[i]
    return tuple(out)


def weyl_act(w: WeylElement, h: CartanElement) -> CartanElement:
    if len(w.perms) != len(h.parts) or any(len(p) != len(x) for p, x in zip(w.perms, h.parts)):
        raise ValueError("Weyl element does not match the Cartan element")
    return CartanElement(h.group, tuple(act_on_vector(p, x) for p, x in zip(w.perms, h.parts)), h.scalars)


def weyl_act_weight(w: WeylElement, lam: WeightVector) -> WeightVector:
    return WeightVector(tuple(act_on_vector(p, x) for p, x in zip(w.perms, lam.parts)), lam.charges)


def permutation_length(p: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def shuffles_of_length(x: Sequence, length: int) -> list[Permutation]:
    """Permutations of the given length that keep equal entries of ``x`` in order.

    ``x`` must be non-increasing.  A shuffle ``p`` is encoded by the word
    ``y[p(i)] = block(i)``; its length is the inversion number of that word,
    which lets the recursion prune on the inversions still available.
    """
    d = len(x)
    if any(x[i] < x[i + 1] for i in range(d - 1)):
        raise ValueError("x must be non-increasing")
    blocks: list[int] = []
    b = -1
    for i in range(d):
        if i == 0 or x[i] != x[i - 1]:
            b += 1
        blocks.append(b)
    counts = [blocks.count(k) for k in range(b + 1)]
    starts = [blocks.index(k) for k in range(b + 1)]
    out: list[Permutation] = []
    word: list[int] = []

    def max_inv(cnt):
        # Inversions of the remaining letters if written in decreasing order.
        total, seen = 0, 0
        for k in range(len(cnt)):
            total += cnt[k] * seen
            seen += cnt[k]
        return total

    def rec(remaining: int):
        if sum(counts) == 0:
            if remaining == 0:
                out.append(_word_to_perm(word, starts, d))
            return
        if remaining < 0 or max_inv(counts) < remaining:
            return
        for k in range(len(counts)):
            if counts[k] == 0:
                continue
            # Placing letter k now creates one inversion with every smaller
            # letter still to come.
            gained = sum(counts[:k])
            counts[k] -= 1
            word.append(k)
            rec(remaining - gained)
            word.pop()
            counts[k] += 1

    rec(length)
    return out


def _word_to_perm(word, starts, d):
    nxt = list(starts)
    p = [0] * d
    for pos, k in enumerate(word):
        p[nxt[k]] = pos
        nxt[k] += 1
    return tuple(p)


def all_permutations(d: int) -> Iterator[Permutation]:
    return permutations(range(d))

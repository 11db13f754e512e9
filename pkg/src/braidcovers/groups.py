"""Explicit subgroups of S_n: closures, centralizers, and fingerprints.

Everything here works with literal element sets, which is the right
scale for this problem: the groups that occur are subgroups of S_n for
n at most 12, and the ones that get fingerprinted are small monodromy
images.  Centralizers are built from cycle-structure generators and
closed, not by scanning all of S_n.
"""

from __future__ import annotations

import dataclasses
import math
from collections import Counter
from typing import Dict, Iterable, Sequence, Tuple

from . import perm
from .perm import Perm


class ElementSet:
    """An immutable set of same-degree permutations, iterated in sorted order."""

    __slots__ = ("degree", "_set", "_sorted")

    def __init__(self, degree: int, elements: Iterable[Perm]):
        self.degree = degree
        self._set = frozenset(elements)
        for p in self._set:
            if len(p) != degree:
                raise ValueError(
                    f"element of degree {len(p)} in a degree-{degree} set")
        self._sorted = tuple(sorted(self._set))

    def __len__(self) -> int:
        return len(self._set)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, p: Perm) -> bool:
        return p in self._set

    def __eq__(self, other) -> bool:
        return (isinstance(other, ElementSet)
                and self.degree == other.degree and self._set == other._set)

    def __hash__(self) -> int:
        return hash((self.degree, self._set))

    def __repr__(self) -> str:
        return f"ElementSet(degree={self.degree}, order={len(self)})"


def closure(generators: Sequence[Perm], n: int) -> ElementSet:
    """The subgroup generated inside S_n, as an explicit element set."""
    for g in generators:
        if len(g) != n:
            raise ValueError(f"generator of degree {len(g)}, expected {n}")
    ident = perm.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = perm.compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return ElementSet(n, seen)


def is_transitive(generators: Sequence[Perm], n: int) -> bool:
    """True when the generated group has a single orbit on 1..n."""
    for g in generators:
        if len(g) != n:
            raise ValueError(f"generator of degree {len(g)}, expected {n}")
    reached = 1 << 0
    frontier = [0]
    size = 1
    while frontier and size < n:
        nxt = []
        for x in frontier:
            for g in generators:
                y = g[x]
                if not reached >> y & 1:
                    reached |= 1 << y
                    size += 1
                    nxt.append(y)
        frontier = nxt
    return size == n


def centralizer_order(g: Perm) -> int:
    """|C(g)| in S_n from the cycle type: prod over lengths L of L^k * k!."""
    counts = Counter(perm.cycle_type(g))
    out = 1
    for length, k in counts.items():
        out *= length ** k * math.factorial(k)
    return out


def centralizer_generators(g: Perm) -> list[Perm]:
    """Generators for C(g) in S_n: each cycle of g, plus one swap of
    consecutive equal-length cycles per length class."""
    n = len(g)
    cycles = perm.disjoint_cycles(g)
    by_length: Dict[int, list] = {}
    for c in cycles:
        by_length.setdefault(len(c), []).append(c)
    gens = []
    for length in sorted(by_length):
        cs = by_length[length]
        if length > 1:
            for c in cs:
                rot = list(range(n))
                for a, b in zip(c, c[1:] + c[:1]):
                    rot[a] = b
                gens.append(tuple(rot))
        for c, d in zip(cs, cs[1:]):
            swap = list(range(n))
            for a, b in zip(c, d):
                swap[a], swap[b] = b, a
            gens.append(tuple(swap))
    return gens


def centralizer_elements(g: Perm, n: int) -> ElementSet:
    """C(g) in S_n as an explicit set, built from generators and closed."""
    if len(g) != n:
        raise ValueError(f"degree mismatch: {len(g)} vs {n}")
    out = closure(centralizer_generators(g), n)
    if len(out) != centralizer_order(g):
        raise AssertionError(
            f"centralizer closure has order {len(out)}, "
            f"cycle type predicts {centralizer_order(g)}")
    return out


def intersect(a: ElementSet, b: ElementSet) -> ElementSet:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return ElementSet(a.degree, (p for p in small if p in large))


# Fixed label vocabulary for image groups.  Within it, (order, abelian?)
# plus the element-order histogram separates every isomorphism class;
# D8 vs Q8 at order 8 differ in involution count (5 vs 1).  Any group
# outside the vocabulary is reported as "other", never misnamed.
_NAME_TABLE: Dict[Tuple[int, bool, Tuple[Tuple[int, int], ...]], str] = {}


def _register(name: str, order: int, abelian: bool, hist: Dict[int, int]):
    key = (order, abelian, tuple(sorted(hist.items())))
    _NAME_TABLE[key] = name


_register("trivial", 1, True, {1: 1})
_register("C2", 2, True, {1: 1, 2: 1})
_register("C3", 3, True, {1: 1, 3: 2})
_register("C4", 4, True, {1: 1, 2: 1, 4: 2})
_register("C2 x C2", 4, True, {1: 1, 2: 3})
_register("C6", 6, True, {1: 1, 2: 1, 3: 2, 6: 2})
_register("S3", 6, False, {1: 1, 2: 3, 3: 2})
_register("C8", 8, True, {1: 1, 2: 1, 4: 2, 8: 4})
_register("C4 x C2", 8, True, {1: 1, 2: 3, 4: 4})
_register("C2 x C2 x C2", 8, True, {1: 1, 2: 7})
_register("D8", 8, False, {1: 1, 2: 5, 4: 2})
_register("Q8", 8, False, {1: 1, 2: 1, 4: 6})
_register("A4", 12, False, {1: 1, 2: 3, 3: 8})
_register("D12", 12, False, {1: 1, 2: 7, 3: 2, 6: 2})
_register("S4", 24, False, {1: 1, 2: 9, 3: 8, 4: 6})


def _group_name(order: int, abelian: bool, hist: Dict[int, int]) -> str:
    key = (order, abelian, tuple(sorted(hist.items())))
    return _NAME_TABLE.get(key, "other")


@dataclasses.dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-sensitive summary of a permutation group."""

    order: int
    transitive: bool
    abelian: bool
    order_histogram: Tuple[Tuple[int, int], ...]
    name: str

    def histogram_dict(self) -> Dict[int, int]:
        return dict(self.order_histogram)

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "transitive": self.transitive,
            "abelian": self.abelian,
            "order_histogram": {str(k): v for k, v in self.order_histogram},
            "name": self.name,
        }


def fingerprint(generators: Sequence[Perm], n: int) -> GroupFingerprint:
    """Order, transitivity, abelianness, element-order histogram, and a
    name for the generated subgroup of S_n ("other" when not recognised)."""
    elements = closure(generators, n)
    abelian = all(
        perm.commutes(g, h)
        for i, g in enumerate(generators) for h in generators[i + 1:])
    hist = Counter(perm.order_of(p) for p in elements)
    histogram = tuple(sorted(hist.items()))
    return GroupFingerprint(
        order=len(elements),
        transitive=is_transitive(generators, n),
        abelian=abelian,
        order_histogram=histogram,
        name=_group_name(len(elements), abelian, dict(hist)),
    )

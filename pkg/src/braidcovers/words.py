"""Words over the five surface-braid generators, and the defining relators.

The group is generated by sigma, a1, a2, b1, b2 subject to eleven
relations in four families:

  R2, one per x in {a1, a2, b1, b2}:
      sigma^-1 x sigma^-1 x  =  x sigma^-1 x sigma^-1
  R3, for (x, y) in {(a1, a2), (b1, b2), (a1, b2), (b1, a2)}:
      sigma^-1 x sigma y     =  y sigma^-1 x sigma
  R4, for (x, y) in {(a1, b1), (a2, b2)}:
      sigma^-1 x sigma^-1 y  =  y sigma^-1 x sigma
  TR:
      [a1, b1^-1] [a2, b2^-1]  =  sigma^2        with [u, v] = u v u^-1 v^-1

Each relation X = Y is stored once, as the relator word X * Y^-1; a tuple
of permutations is a representation exactly when every relator evaluates
to the identity.  These word tables are the single source of truth: the
search engine's pruning is validated against them, never the other way
round.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Dict, Tuple

from . import perm
from .perm import Perm


class Gen(enum.Enum):
    SIGMA = "sigma"
    A1 = "a1"
    A2 = "a2"
    B1 = "b1"
    B2 = "b2"

    def __repr__(self) -> str:  # keeps relator dumps readable
        return self.value


Letter = Tuple[Gen, int]
Word = Tuple[Letter, ...]


def inverted(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def word_str(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for g, e in word:
        parts.append(g.value if e == 1 else f"{g.value}^{e}")
    return " ".join(parts)


@dataclasses.dataclass(frozen=True)
class Relator:
    label: str
    word: Word

    def __str__(self) -> str:
        return f"{self.label}: {word_str(self.word)}"


def _equation(label: str, lhs: Word, rhs: Word) -> Relator:
    return Relator(label, lhs + inverted(rhs))


def _build_relators() -> Tuple[Relator, ...]:
    S = Gen.SIGMA
    named = {"a1": Gen.A1, "a2": Gen.A2, "b1": Gen.B1, "b2": Gen.B2}
    rels = []
    for name in ("a1", "a2", "b1", "b2"):
        x = named[name]
        rels.append(_equation(
            f"R2_{name}",
            ((S, -1), (x, 1), (S, -1), (x, 1)),
            ((x, 1), (S, -1), (x, 1), (S, -1)),
        ))
    for xn, yn in (("a1", "a2"), ("b1", "b2"), ("a1", "b2"), ("b1", "a2")):
        x, y = named[xn], named[yn]
        rels.append(_equation(
            f"R3_{xn}_{yn}",
            ((S, -1), (x, 1), (S, 1), (y, 1)),
            ((y, 1), (S, -1), (x, 1), (S, 1)),
        ))
    for xn, yn in (("a1", "b1"), ("a2", "b2")):
        x, y = named[xn], named[yn]
        rels.append(_equation(
            f"R4_{xn}_{yn}",
            ((S, -1), (x, 1), (S, -1), (y, 1)),
            ((y, 1), (S, -1), (x, 1), (S, 1)),
        ))
    A1, A2, B1, B2 = Gen.A1, Gen.A2, Gen.B1, Gen.B2
    rels.append(_equation(
        "TR",
        ((A1, 1), (B1, -1), (A1, -1), (B1, 1),
         (A2, 1), (B2, -1), (A2, -1), (B2, 1)),
        ((S, 2),),
    ))
    return tuple(rels)


RELATORS: Tuple[Relator, ...] = _build_relators()
RELATOR_LABELS: Tuple[str, ...] = tuple(r.label for r in RELATORS)


def relator_table() -> str:
    """The eleven relators as one debugging-friendly text block; not a
    stable wire format."""
    return "\n".join(str(r) for r in RELATORS)


@dataclasses.dataclass(frozen=True)
class Assignment:
    """Images of the five generators in one symmetric group S_n."""

    n: int
    sigma: Perm
    a1: Perm
    a2: Perm
    b1: Perm
    b2: Perm

    def __post_init__(self) -> None:
        for name in ("sigma", "a1", "a2", "b1", "b2"):
            p = getattr(self, name)
            if len(p) != self.n:
                raise ValueError(
                    f"{name} has degree {len(p)}, expected {self.n}")

    def image(self, gen: Gen) -> Perm:
        return getattr(self, gen.value)

    def images(self) -> Dict[Gen, Perm]:
        return {g: self.image(g) for g in Gen}

    def sort_key(self) -> Tuple[int, ...]:
        return self.sigma + self.a1 + self.a2 + self.b1 + self.b2

    def conjugated(self, by: Perm) -> "Assignment":
        return Assignment(
            self.n,
            perm.conjugate(self.sigma, by),
            perm.conjugate(self.a1, by),
            perm.conjugate(self.a2, by),
            perm.conjugate(self.b1, by),
            perm.conjugate(self.b2, by),
        )

    def __str__(self) -> str:
        return (f"sigma={perm.format_cycles(self.sigma)} "
                f"a1={perm.format_cycles(self.a1)} "
                f"a2={perm.format_cycles(self.a2)} "
                f"b1={perm.format_cycles(self.b1)} "
                f"b2={perm.format_cycles(self.b2)}")


def evaluate(word: Word, assignment: Assignment) -> Perm:
    """The permutation a word evaluates to, products taken left to right."""
    out = perm.identity(assignment.n)
    for g, e in word:
        p = assignment.image(g)
        if e < 0:
            p, e = perm.inverse(p), -e
        for _ in range(e):
            out = perm.compose(out, p)
    return out


@dataclasses.dataclass(frozen=True)
class RelationReport:
    results: Tuple[Tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failing(self) -> Tuple[str, ...]:
        return tuple(label for label, ok in self.results if not ok)

    def __str__(self) -> str:
        if self.passed:
            return "all relations hold"
        return "failing: " + ", ".join(self.failing)


def check_relations(assignment: Assignment) -> RelationReport:
    """Evaluate every relator; a representation passes all eleven."""
    ident = perm.identity(assignment.n)
    return RelationReport(tuple(
        (r.label, evaluate(r.word, assignment) == ident) for r in RELATORS))


def satisfies_all_relations(assignment: Assignment) -> bool:
    """Like check_relations().passed but stops at the first failure."""
    ident = perm.identity(assignment.n)
    return all(evaluate(r.word, assignment) == ident for r in RELATORS)

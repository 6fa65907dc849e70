"""Finite mereology on weighted atom sets.

Terms are subsets of a fixed finite atom set whose atoms carry positive
rational weights summing to one. Part and component relations, the Boolean
term algebra, the weight function and rough-inclusion degrees are computed
with exact rational arithmetic throughout; no floats enter here.

Existential import: relations between things (overlap, exterior, inclusion
degree, parthood on the left) presuppose non-empty terms. The empty term
still exists as an algebraic value, carrying weight zero, because sums,
products and complements must stay total.

Universes compare by identity. Mixing terms from two universes raises
UniverseMismatchError even if the universes look alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import (
    DomainError,
    EmptyTermError,
    UndefinedDegreeError,
    UniverseMismatchError,
)

Atom = Hashable
Degree = Fraction


@dataclass(frozen=True, eq=False)
class WeightedUniverse:
    """A finite atom set with positive rational weights summing to one."""

    atoms: tuple[Atom, ...]
    atom_weights: Mapping[Atom, Fraction]

    def __post_init__(self):
        if not self.atoms:
            raise DomainError("a universe needs at least one atom")
        if len(set(self.atoms)) != len(self.atoms):
            raise DomainError("duplicate atoms")
        if set(self.atom_weights) != set(self.atoms):
            raise DomainError("weights must cover exactly the atoms")
        for a, w in self.atom_weights.items():
            if not isinstance(w, Fraction):
                raise DomainError(f"weight of {a!r} is not a Fraction")
            if w <= 0:
                raise DomainError(f"weight of {a!r} must be positive")
        if sum(self.atom_weights.values()) != 1:
            raise DomainError("atom weights must sum to exactly 1")

    @classmethod
    def uniform(cls, atoms: Iterable[Atom]) -> "WeightedUniverse":
        atoms = tuple(atoms)
        n = len(atoms)
        return cls(atoms, {a: Fraction(1, n) for a in atoms})

    @classmethod
    def from_counts(cls, counts: Mapping[Atom, int]) -> "WeightedUniverse":
        """Normalise positive integer masses into exact weights."""
        atoms = tuple(counts)
        total = sum(counts.values())
        return cls(atoms, {a: Fraction(c, total) for a, c in counts.items()})

    def term(self, members: Iterable[Atom]) -> "Term":
        members = frozenset(members)
        stray = members - set(self.atoms)
        if stray:
            raise DomainError(f"atoms not in this universe: {sorted(stray, key=repr)}")
        return Term(self, members)

    @property
    def empty(self) -> "Term":
        return Term(self, frozenset())

    @property
    def universe(self) -> "Term":
        return Term(self, frozenset(self.atoms))

    def all_terms(self, include_empty: bool = False) -> Iterator["Term"]:
        """Every term, ordered by size then by atom representation."""
        atoms = sorted(self.atoms, key=repr)
        start = 0 if include_empty else 1
        for size in range(start, len(atoms) + 1):
            for combo in combinations(atoms, size):
                yield Term(self, frozenset(combo))


@dataclass(frozen=True)
class Term:
    """A subset of one universe's atoms."""

    universe: WeightedUniverse
    members: frozenset[Atom]

    @property
    def is_empty(self) -> bool:
        return not self.members

    def __repr__(self):
        return f"Term({{{', '.join(map(repr, sorted(self.members, key=repr)))}}})"


def _same_universe(*terms: Term) -> WeightedUniverse:
    u = terms[0].universe
    for t in terms[1:]:
        if t.universe is not u:
            raise UniverseMismatchError("terms belong to different universes")
    return u


def _import_required(*terms: Term) -> None:
    for t in terms:
        if t.is_empty:
            raise EmptyTermError("the empty term has no existential import")


def proper_part(x: Term, y: Term) -> bool:
    """Strict containment of a non-empty term. Nothing is part of itself."""
    _same_universe(x, y)
    return bool(x.members) and x.members < y.members


def component(x: Term, y: Term) -> bool:
    """Proper part or equality, for non-empty x."""
    _same_universe(x, y)
    return bool(x.members) and x.members <= y.members


def overlap(x: Term, y: Term) -> bool:
    _same_universe(x, y)
    _import_required(x, y)
    return bool(x.members & y.members)


def exterior(x: Term, y: Term) -> bool:
    return not overlap(x, y)


def relative_exterior(a: Term, m: Term, b: Term) -> bool:
    """Both proper parts of b, yet disjoint from one another."""
    _same_universe(a, m, b)
    _import_required(a, m)
    return proper_part(a, b) and proper_part(m, b) and exterior(a, m)


def class_of(terms: Iterable[Term]) -> Term:
    """The mereological class of a collection: the union of its members.

    The collection must be non-empty and every member must be non-empty;
    there is no null class.
    """
    terms = tuple(terms)
    if not terms:
        raise DomainError("the class of an empty collection does not exist")
    u = _same_universe(*terms)
    _import_required(*terms)
    merged: frozenset[Atom] = frozenset()
    for t in terms:
        merged |= t.members
    return Term(u, merged)


def alg_sum(x: Term, y: Term) -> Term:
    u = _same_universe(x, y)
    return Term(u, x.members | y.members)


def alg_product(x: Term, y: Term) -> Term:
    u = _same_universe(x, y)
    return Term(u, x.members & y.members)


def alg_complement(x: Term) -> Term:
    return Term(x.universe, frozenset(x.universe.atoms) - x.members)


def implication(x: Term, y: Term) -> Term:
    """The term value of x implying y: complement of x joined with y."""
    return alg_sum(alg_complement(x), y)


def is_valid(x: Term) -> bool:
    """True when the term is the whole universe."""
    return x.members == frozenset(x.universe.atoms)


def weight(x: Term) -> Fraction:
    return sum((x.universe.atom_weights[a] for a in x.members), Fraction(0))


def degree_of_part(x: Term, y: Term) -> Degree:
    """Exact rough-inclusion degree of x in y: weight of x.y over weight of x."""
    _same_universe(x, y)
    if x.is_empty:
        raise UndefinedDegreeError("inclusion degree of the empty term is undefined")
    return weight(alg_product(x, y)) / weight(x)


def nonempty_subsets(x: Term) -> Iterator[Term]:
    """All non-empty component terms of x, smallest first."""
    atoms = sorted(x.members, key=repr)
    u = x.universe
    for combo in chain.from_iterable(
        combinations(atoms, size) for size in range(1, len(atoms) + 1)
    ):
        yield Term(u, frozenset(combo))

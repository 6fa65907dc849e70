"""Decision tables: ingestion, indiscernibility classes, consistency.

A decision table holds finitely many objects described by discrete feature
values plus one real-valued decision column. Feature values are opaque
tokens compared by equality, never ordered or parsed. Object identity is
the row index at load time, so duplicate rows stay distinct objects and
identities survive row removal.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    DecisionParseError,
    DomainError,
    SchemaError,
    StructuralError,
    UsageError,
)

ObjectId = int
Value = Hashable


@dataclass(frozen=True, order=True)
class Descriptor:
    """One (feature, value) pair of some object."""

    feature: str
    value: Value


@dataclass(frozen=True)
class NewObject:
    """An incoming object, given by exactly one descriptor per feature."""

    descriptors: frozenset[Descriptor]

    def __post_init__(self):
        names = [d.feature for d in self.descriptors]
        if len(set(names)) != len(names):
            raise DomainError("a new object needs exactly one descriptor per feature")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Value]) -> "NewObject":
        return cls(frozenset(Descriptor(f, v) for f, v in values.items()))

    def __iter__(self):
        return iter(self.descriptors)

    def __len__(self) -> int:
        return len(self.descriptors)

    @property
    def features(self) -> frozenset[str]:
        return frozenset(d.feature for d in self.descriptors)

    def value(self, feature: str) -> Value:
        for d in self.descriptors:
            if d.feature == feature:
                return d.value
        raise KeyError(f"unknown feature {feature!r}")

    def as_mapping(self) -> dict[str, Value]:
        return {d.feature: d.value for d in sorted(self.descriptors, key=lambda d: d.feature)}

    def extended(self, feature: str, value: Value) -> "NewObject":
        """A copy with one extra descriptor. The feature must be new."""
        if feature in self.features:
            raise SchemaError(f"feature {feature!r} already present")
        return NewObject(self.descriptors | {Descriptor(feature, value)})


@dataclass(frozen=True)
class DecisionSystem:
    """Immutable object/feature/decision table.

    Invariants enforced at construction: feature names are unique, the
    value table is rectangular over objects x features, and every object
    carries a decision.
    """

    objects: tuple[ObjectId, ...]
    features: tuple[str, ...]
    table: Mapping[tuple[ObjectId, str], Value]
    decisions: Mapping[ObjectId, float]

    def __post_init__(self):
        if len(set(self.features)) != len(self.features):
            raise SchemaError("duplicate feature names")
        if len(set(self.objects)) != len(self.objects):
            raise DomainError("duplicate object ids")
        for o in self.objects:
            if o not in self.decisions:
                raise DomainError(f"object {o} has no decision value")
        if len(self.table) != len(self.objects) * len(self.features):
            raise DomainError("value table is not rectangular")
        for o in self.objects:
            for f in self.features:
                if (o, f) not in self.table:
                    raise DomainError(f"missing cell ({o}, {f!r})")

    @classmethod
    def from_rows(
        cls,
        features: Sequence[str],
        rows: Sequence[Sequence[Value]],
        decisions: Sequence[float],
        object_ids: Sequence[ObjectId] | None = None,
    ) -> "DecisionSystem":
        if len(rows) != len(decisions):
            raise DomainError("rows and decisions differ in length")
        ids = tuple(object_ids) if object_ids is not None else tuple(range(len(rows)))
        table: dict[tuple[ObjectId, str], Value] = {}
        for o, row in zip(ids, rows):
            if len(row) != len(features):
                raise StructuralError(f"object {o} has {len(row)} values, expected {len(features)}")
            for f, v in zip(features, row):
                table[(o, f)] = v
        return cls(ids, tuple(features), table, dict(zip(ids, (float(d) for d in decisions))))

    def value(self, o: ObjectId, feature: str) -> Value:
        if o not in self.decisions:
            raise KeyError(f"unknown object id {o}")
        if feature not in self.features:
            raise KeyError(f"unknown feature {feature!r}")
        return self.table[(o, feature)]

    def row(self, o: ObjectId) -> dict[str, Value]:
        return {f: self.value(o, f) for f in self.features}

    def as_new_object(self, o: ObjectId) -> NewObject:
        return NewObject.from_mapping(self.row(o))

    def without_object(self, o: ObjectId) -> "DecisionSystem":
        """The same table minus one object. Remaining ids are unchanged."""
        if o not in self.decisions:
            raise KeyError(f"unknown object id {o}")
        keep = tuple(x for x in self.objects if x != o)
        table = {(x, f): self.table[(x, f)] for x in keep for f in self.features}
        decisions = {x: self.decisions[x] for x in keep}
        return DecisionSystem(keep, self.features, table, decisions)


def load_decision_system(
    source: Iterable[str],
    decision_column: str | None = None,
    delimiter: str = ",",
) -> DecisionSystem:
    """Read a delimiter-separated table with a header row.

    The decision column defaults to the last header name. Decision cells
    must parse as real numbers; all other cells are kept verbatim as
    string tokens. Lines are numbered from 1 with the header as line 1,
    so error messages point at the physical line.
    """
    reader = csv.reader(source, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise StructuralError("empty input, no header row") from None
    if len(set(header)) != len(header):
        dupes = sorted({h for h in header if header.count(h) > 1})
        raise SchemaError(f"duplicate header names: {', '.join(dupes)}")
    if decision_column is None:
        decision_column = header[-1]
    if decision_column not in header:
        raise UsageError(f"unknown decision column {decision_column!r}")
    d_idx = header.index(decision_column)
    features = tuple(h for i, h in enumerate(header) if i != d_idx)

    rows: list[tuple[Value, ...]] = []
    decisions: list[float] = []
    for line_no, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) != len(header):
            raise StructuralError(
                f"row {line_no} has {len(cells)} cells but the header has {len(header)}"
            )
        raw = cells[d_idx]
        try:
            decision = float(raw)
        except ValueError:
            raise DecisionParseError(
                f"row {line_no}, column {decision_column!r}: {raw!r} is not a real number"
            ) from None
        rows.append(tuple(v for i, v in enumerate(cells) if i != d_idx))
        decisions.append(decision)
    return DecisionSystem.from_rows(features, rows, decisions)


def indiscernibility_class(
    system: DecisionSystem, o: ObjectId, features: Iterable[str]
) -> frozenset[ObjectId]:
    """Objects agreeing with o on every feature in the given non-empty set."""
    chosen = tuple(dict.fromkeys(features))
    if not chosen:
        raise DomainError("indiscernibility needs a non-empty feature set")
    reference = [system.value(o, f) for f in chosen]
    return frozenset(
        other
        for other in system.objects
        if all(system.value(other, f) == ref for f, ref in zip(chosen, reference))
    )


def find_inconsistency(system: DecisionSystem) -> tuple[ObjectId, ObjectId] | None:
    """A witness pair sharing all feature values but not the decision, if any."""
    first_seen: dict[tuple[Value, ...], ObjectId] = {}
    for o in system.objects:
        signature = tuple(system.table[(o, f)] for f in system.features)
        if signature in first_seen:
            earlier = first_seen[signature]
            if system.decisions[earlier] != system.decisions[o]:
                return (earlier, o)
        else:
            first_seen[signature] = o
    return None


def is_consistent(system: DecisionSystem) -> bool:
    """True when every full-feature indiscernibility class shares one decision."""
    return find_inconsistency(system) is None


def consistentize(system: DecisionSystem, feature: str = "d") -> DecisionSystem:
    """Copy the decision into a new discrete feature column.

    The enlarged feature set splits every mixed-decision class, so the
    result is always consistent. The synthetic column name must not
    collide with an existing feature.
    """
    if feature in system.features:
        raise SchemaError(f"feature {feature!r} already exists")
    table = dict(system.table)
    for o in system.objects:
        table[(o, feature)] = system.decisions[o]
    return DecisionSystem(
        system.objects,
        system.features + (feature,),
        table,
        dict(system.decisions),
    )

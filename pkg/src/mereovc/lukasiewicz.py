"""The Lukasiewicz operator family on [0, 1] and degree propagation.

Includes a generic t-norm contract check on a rational grid and the rules
that push rough-inclusion degrees through the algebra's connectives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, UsageError

Real = float


def t_norm(x: Real, y: Real) -> Real:
    return max(0.0, x + y - 1.0)


def s_norm(x: Real, y: Real) -> Real:
    return min(1.0, x + y)


def implication(x: Real, y: Real) -> Real:
    """Residuum of the t-norm: 1 exactly when x <= y, else 1 - x + y."""
    return min(1.0, 1.0 - x + y)


def negation(x: Real) -> Real:
    return 1.0 - x


def weak_and(x: Real, y: Real) -> Real:
    return min(x, y)


def weak_or(x: Real, y: Real) -> Real:
    return max(x, y)


class Connective(enum.Enum):
    SUM = "sum"
    STRONG_SUM = "strong_sum"
    PRODUCT = "product"
    STRONG_PRODUCT = "strong_product"
    IMPLICATION = "implication"
    NEGATION = "negation"


def propagate(r, s, connective: Connective):
    """Degree of a compound part given the degrees of its arguments.

    Works on floats and on Fractions alike; only order, addition and
    subtraction are used. For NEGATION the second argument is ignored
    and may be None.
    """
    c = Connective(connective)
    degree_in_unit_interval(r)
    if c is not Connective.NEGATION:
        degree_in_unit_interval(s)
    if c is Connective.SUM:
        return max(r, s)
    if c is Connective.STRONG_SUM:
        return min(1, r + s)
    if c is Connective.PRODUCT:
        return min(r, s)
    if c is Connective.STRONG_PRODUCT:
        return max(0, r + s - 1)
    if c is Connective.IMPLICATION:
        return max(0, r + s - 1)
    return 1 - r


@dataclass(frozen=True)
class TNormViolation:
    condition: str
    point: tuple[Real, ...]
    detail: str


@dataclass(frozen=True)
class TNormCheck:
    ok: bool
    violation: TNormViolation | None

    def __bool__(self) -> bool:
        return self.ok


def grid_points(grid_step: Fraction) -> list[Real]:
    step = Fraction(grid_step)
    if step <= 0 or (1 / step).denominator != 1:
        raise UsageError("grid_step must be a positive rational dividing 1")
    n = int(1 / step)
    return [float(Fraction(k, n)) for k in range(n + 1)]


def check_t_norm(
    op: Callable[[Real, Real], Real],
    grid_step: Fraction = Fraction(1, 64),
    tolerance: float = 1e-9,
) -> TNormCheck:
    """Exhaustive t-norm contract check on the grid.

    Conditions are tried in order: commutativity, associativity,
    monotonicity in the first argument, then the boundary laws
    op(x, 1) = x and op(x, 0) = 0. The first violation is returned.
    Monotonicity over consecutive grid points implies monotonicity on
    the whole grid, so only neighbours are compared.
    """
    pts = grid_points(grid_step)

    for x in pts:
        for y in pts:
            if abs(op(x, y) - op(y, x)) > tolerance:
                return TNormCheck(False, TNormViolation(
                    "commutativity", (x, y), f"op({x},{y}) != op({y},{x})"))
    for x in pts:
        for y in pts:
            xy = op(x, y)
            for z in pts:
                if abs(op(xy, z) - op(x, op(y, z))) > tolerance:
                    return TNormCheck(False, TNormViolation(
                        "associativity", (x, y, z),
                        f"op(op({x},{y}),{z}) != op({x},op({y},{z}))"))
    for x1, x2 in zip(pts, pts[1:]):
        for y in pts:
            if op(x1, y) > op(x2, y) + tolerance:
                return TNormCheck(False, TNormViolation(
                    "monotonicity", (x1, x2, y),
                    f"op decreases from x={x1} to x={x2} at y={y}"))
    for x in pts:
        if abs(op(x, 1.0) - x) > tolerance:
            return TNormCheck(False, TNormViolation(
                "boundary", (x, 1.0), f"op({x},1) != {x}"))
        if abs(op(x, 0.0)) > tolerance:
            return TNormCheck(False, TNormViolation(
                "boundary", (x, 0.0), f"op({x},0) != 0"))
    return TNormCheck(True, None)


def formula_identities(
    grid_step: Fraction = Fraction(1, 64), tolerance: float = 1e-9
):
    """Grid checks tying the derived operators to the primitive ones.

    Returns LawReport records for: negation as implication into 0, weak
    conjunction recovered from the strong ones, weak disjunction from
    nested implications, strong disjunction by De Morgan, the residuation
    boundary of the implication, and the propagation closed forms.
    """
    from .laws import LawReport

    pts = grid_points(grid_step)
    reports = {
        name: LawReport(name)
        for name in (
            "negation via implication to zero",
            "weak conjunction from strong operators",
            "weak disjunction from nested implications",
            "strong disjunction by De Morgan",
            "implication residuation boundary",
            "propagation closed forms",
        )
    }

    def close(a: Real, b: Real) -> bool:
        return abs(a - b) <= tolerance

    for p in pts:
        reports["negation via implication to zero"].check(
            close(implication(p, 0.0), negation(p)), f"p={p}")
    for p in pts:
        for q in pts:
            pq = f"p={p} q={q}"
            reports["weak conjunction from strong operators"].check(
                close(t_norm(p, implication(p, q)), weak_and(p, q)), pq)
            reports["weak disjunction from nested implications"].check(
                close(
                    weak_and(
                        implication(implication(p, q), q),
                        implication(implication(q, p), p),
                    ),
                    weak_or(p, q),
                ),
                pq,
            )
            reports["strong disjunction by De Morgan"].check(
                close(negation(t_norm(negation(p), negation(q))), s_norm(p, q)), pq)
            reports["implication residuation boundary"].check(
                (implication(p, q) >= 1.0 - tolerance) == (p <= q + tolerance), pq)
            closed = {
                Connective.SUM: weak_or(p, q),
                Connective.STRONG_SUM: s_norm(p, q),
                Connective.PRODUCT: weak_and(p, q),
                Connective.STRONG_PRODUCT: t_norm(p, q),
                Connective.IMPLICATION: t_norm(p, q),
                Connective.NEGATION: negation(p),
            }
            reports["propagation closed forms"].check(
                all(close(propagate(p, q, c), want) for c, want in closed.items()), pq)
    return list(reports.values())


def degree_in_unit_interval(value) -> None:
    """Reject degrees outside [0, 1]."""
    if not 0 <= value <= 1:
        raise DomainError(f"degree {value!r} outside [0, 1]")

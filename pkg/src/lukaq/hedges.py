"""Hedge chains (basic literals) and constructive threshold simulation.

A basic literal is a chain of k-fold bounded sums ("somewhat", k copies
joined by bounded sum) and k-fold bounded products ("very", k copies joined
by bounded product) applied to one formula. `synthesize_threshold_literal`
builds, for any rational 0 <= q1 < q2 <= 1, a literal whose one-variable
degree function is 0 up to q1, 1 from q2 on, and nondecreasing in between;
`simulate_geq` uses it to replay a crisp `value >= delta` query as a pure
formula on a concrete column.

The construction doubles the separation interval until it straddles 1/2,
then finishes with at most two steps. Doubling below 1/2 is a bounded sum
(x -> min(1, 2x) is affine there), doubling above is a bounded product
(x -> max(0, 2x-1)); each is an exact affine contraction of the remaining
problem, which gives the step bound ceil(log2(1/(q2-q1))) + 2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .degrees import Degree, check_degree
from .errors import InvalidInterval
from .formula import Formula, IterProd, IterSum, Neg, Var


class HedgeOp(enum.Enum):
    SUM = "sum"
    PROD = "prod"


@dataclass(frozen=True)
class HedgeStep:
    op: HedgeOp
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValueError("hedge steps use k >= 2 (k = 1 is the identity)")


def Sum(count: int) -> HedgeStep:
    return HedgeStep(HedgeOp.SUM, count)


def Prod(count: int) -> HedgeStep:
    return HedgeStep(HedgeOp.PROD, count)


@dataclass(frozen=True)
class BasicLiteral:
    """An ordered hedge chain; steps apply innermost-first. May be empty."""

    steps: tuple[HedgeStep, ...] = ()

    def __init__(self, steps: Iterable[HedgeStep] = ()):
        object.__setattr__(self, "steps", tuple(steps))

    @property
    def is_identity(self) -> bool:
        return not self.steps


def apply_literal(literal: BasicLiteral, phi: Formula) -> Formula:
    """Wrap `phi` in the literal's hedge nodes, first step innermost."""
    out = phi
    for step in literal.steps:
        if step.op is HedgeOp.SUM:
            out = IterSum(step.count, out)
        else:
            out = IterProd(step.count, out)
    return out


def literal_degree(literal: BasicLiteral, x: Fraction) -> Degree:
    """The literal's one-variable degree function, evaluated at `x`."""
    check_degree(x, "literal argument")
    value = x
    for step in literal.steps:
        if step.op is HedgeOp.SUM:
            value = min(Fraction(1), step.count * value)
        else:
            value = max(Fraction(0), step.count * value - step.count + 1)
    return value


@dataclass(frozen=True)
class ThresholdSpec:
    """Separation interval: force degree 0 at/below q1 and 1 at/above q2."""

    q1: Fraction
    q2: Fraction

    def __post_init__(self) -> None:
        check_degree(self.q1, "q1")
        check_degree(self.q2, "q2")
        if self.q1 >= self.q2:
            raise InvalidInterval(f"need q1 < q2, got [{self.q1}, {self.q2}]")


def max_steps(spec: ThresholdSpec) -> int:
    """The guaranteed bound on synthesized chain length for `spec`.

    Exactly ceil(log2(1/(q2-q1))) + 2, computed in integer arithmetic.
    """
    doublings = 0
    width = spec.q2 - spec.q1
    while width < 1:
        width *= 2
        doublings += 1
    return doublings + 2


def synthesize_threshold_literal(spec: ThresholdSpec) -> BasicLiteral:
    """Build a literal separating `spec`'s interval.

    The result g satisfies g(x) = 0 for x <= q1, g(x) = 1 for x >= q2, and
    g is nondecreasing; its length is at most max_steps(spec).
    """
    q1, q2 = spec.q1, spec.q2
    half = Fraction(1, 2)
    steps: list[HedgeStep] = []

    def push(op: HedgeOp, k: int) -> None:
        if k > 1:
            steps.append(HedgeStep(op, k))

    while True:
        if q2 <= half:
            push(HedgeOp.SUM, 2)
            q1, q2 = 2 * q1, 2 * q2
        elif q1 >= half:
            push(HedgeOp.PROD, 2)
            q1, q2 = 2 * q1 - 1, 2 * q2 - 1
        elif q1 == 0:
            push(HedgeOp.SUM, math.ceil(1 / q2))
            break
        elif q2 == 1:
            push(HedgeOp.PROD, math.ceil(1 / (1 - q1)))
            break
        else:
            push(HedgeOp.PROD, 2)
            push(HedgeOp.SUM, math.ceil(1 / (2 * q2 - 1)))
            break
    return BasicLiteral(steps)


def simulate_geq(delta: Fraction, column_values: Sequence[Fraction]) -> BasicLiteral:
    """Literal replaying the crisp query `value >= delta` on this column.

    Applied to the column's variable, the resulting formula has degree 1 on
    exactly the rows whose value is >= delta and degree 0 on every other row
    of this dataset. When no value lies below delta the identity literal is
    returned (the crisp query discards nothing).
    """
    if not column_values:
        raise ValueError("column_values must be nonempty")
    if not 0 < delta <= 1:
        raise InvalidInterval(f"delta must lie in (0,1], got {delta}")
    below = [v for v in column_values if v < delta]
    if not below:
        return BasicLiteral()
    return synthesize_threshold_literal(ThresholdSpec(max(below), delta))


def simulate_leq(delta: Fraction, column_values: Sequence[Fraction]) -> BasicLiteral:
    """Dual of simulate_geq for `value <= delta`.

    The returned literal must be applied to the *negated* column variable:
    value <= delta iff (1 - value) >= (1 - delta).
    """
    if not column_values:
        raise ValueError("column_values must be nonempty")
    if not 0 <= delta < 1:
        raise InvalidInterval(f"delta must lie in [0,1), got {delta}")
    return simulate_geq(1 - delta, [1 - v for v in column_values])


def geq_formula(delta: Fraction, column_values: Sequence[Fraction], var: str) -> Formula:
    """Formula whose degree-1 rows are exactly those with value >= delta."""
    return apply_literal(simulate_geq(delta, column_values), Var(var))


def leq_formula(delta: Fraction, column_values: Sequence[Fraction], var: str) -> Formula:
    """Formula whose degree-1 rows are exactly those with value <= delta."""
    return apply_literal(simulate_leq(delta, column_values), Neg(Var(var)))

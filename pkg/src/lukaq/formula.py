"""Formula AST and its exact [0,1]-valued semantics.

The core language is {falsum, variables, negation, implication}; the derived
connectives (lattice and/or, equivalence, bounded sum/product, truncated
difference, and the iterated k-fold forms) are kept as first-class AST nodes
and evaluated directly by their closed-form semantics. `desugar` rewrites any
formula into the core fragment and is the oracle that pins the direct
evaluation down.

`CrispCmp` is an extension atom for traditional threshold queries
(`(0.875<=X11)`-style). It evaluates to 0 or 1 but is not a formula of the
logic: it has no core encoding and is rejected by `desugar`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .degrees import ONE, ZERO, Degree, check_degree
from .errors import NotDesugarable, UnboundVariable

Assignment = Mapping[str, Degree]


class Formula:
    """Base class for all AST nodes. Nodes are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("variable name must be nonempty")


@dataclass(frozen=True)
class Falsum(Formula):
    pass


@dataclass(frozen=True)
class Verum(Formula):
    pass


@dataclass(frozen=True)
class Neg(Formula):
    arg: Formula


@dataclass(frozen=True)
class Impl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Oplus(Formula):
    """Bounded sum: min(1, a + b)."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Odot(Formula):
    """Bounded product: max(0, a + b - 1)."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Ominus(Formula):
    """Truncated difference: max(0, a - b)."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class IterSum(Formula):
    """k-fold bounded sum of one formula: min(1, k*a)."""

    count: int
    arg: Formula

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("iteration count must be >= 1")


@dataclass(frozen=True)
class IterProd(Formula):
    """k-fold bounded product of one formula: max(0, k*a - k + 1)."""

    count: int
    arg: Formula

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("iteration count must be >= 1")


class CmpDir(enum.Enum):
    GEQ = ">="
    LEQ = "<="


@dataclass(frozen=True)
class CrispCmp(Formula):
    """Crisp threshold atom; degree 1 when the comparison holds, else 0."""

    direction: CmpDir
    threshold: Fraction
    var: str

    def __post_init__(self) -> None:
        check_degree(self.threshold, "comparison threshold")
        if not self.var:
            raise ValueError("variable name must be nonempty")


BinaryNode = Union[Impl, Or, And, Iff, Oplus, Odot, Ominus]


def evaluate(phi: Formula, w: Assignment) -> Degree:
    """Truth degree of `phi` in the world `w`, in exact rational arithmetic.

    Raises UnboundVariable if a variable of `phi` has no value in `w`.
    """
    match phi:
        case Var(name):
            try:
                return w[name]
            except KeyError:
                raise UnboundVariable(name) from None
        case Falsum():
            return ZERO
        case Verum():
            return ONE
        case Neg(a):
            return 1 - evaluate(a, w)
        case Impl(a, b):
            return min(ONE, 1 - (evaluate(a, w) - evaluate(b, w)))
        case Or(a, b):
            return max(evaluate(a, w), evaluate(b, w))
        case And(a, b):
            return min(evaluate(a, w), evaluate(b, w))
        case Iff(a, b):
            return 1 - abs(evaluate(a, w) - evaluate(b, w))
        case Oplus(a, b):
            return min(ONE, evaluate(a, w) + evaluate(b, w))
        case Odot(a, b):
            return max(ZERO, evaluate(a, w) + evaluate(b, w) - 1)
        case Ominus(a, b):
            return max(ZERO, evaluate(a, w) - evaluate(b, w))
        case IterSum(k, a):
            return min(ONE, k * evaluate(a, w))
        case IterProd(k, a):
            return max(ZERO, k * evaluate(a, w) - k + 1)
        case CrispCmp(direction, c, name):
            try:
                value = w[name]
            except KeyError:
                raise UnboundVariable(name) from None
            holds = value >= c if direction is CmpDir.GEQ else value <= c
            return ONE if holds else ZERO
    raise TypeError(f"not a formula node: {phi!r}")


def desugar(phi: Formula) -> Formula:
    """Rewrite into the {Falsum, Var, Neg, Impl} core.

    Degree-preserving for every assignment; the iterated forms expand by
    their inductive definitions (k occurrences of the operand). CrispCmp
    atoms are an extension without a core encoding and raise NotDesugarable.
    """
    match phi:
        case Var() | Falsum():
            return phi
        case Verum():
            return Neg(Falsum())
        case Neg(a):
            return Neg(desugar(a))
        case Impl(a, b):
            return Impl(desugar(a), desugar(b))
        case Or(a, b):
            da, db = desugar(a), desugar(b)
            return Impl(Impl(da, db), db)
        case And(a, b):
            return desugar(Neg(Or(Neg(a), Neg(b))))
        case Iff(a, b):
            return desugar(And(Impl(a, b), Impl(b, a)))
        case Oplus(a, b):
            return Impl(Neg(desugar(a)), desugar(b))
        case Odot(a, b):
            return desugar(Neg(Oplus(Neg(a), Neg(b))))
        case Ominus(a, b):
            return desugar(Neg(Impl(a, b)))
        case IterSum(k, a):
            out = a
            for _ in range(k - 1):
                out = Oplus(a, out)
            return desugar(out)
        case IterProd(k, a):
            out = a
            for _ in range(k - 1):
                out = Odot(a, out)
            return desugar(out)
        case CrispCmp():
            raise NotDesugarable("crisp comparison atoms have no core encoding")
    raise TypeError(f"not a formula node: {phi!r}")


def free_vars(phi: Formula) -> set[str]:
    """The set of variable names occurring in `phi`."""
    match phi:
        case Var(name):
            return {name}
        case Falsum() | Verum():
            return set()
        case Neg(a) | IterSum(_, a) | IterProd(_, a):
            return free_vars(a)
        case Impl(a, b) | Or(a, b) | And(a, b) | Iff(a, b) | Oplus(a, b) | Odot(a, b) | Ominus(a, b):
            return free_vars(a) | free_vars(b)
        case CrispCmp(_, _, name):
            return {name}
    raise TypeError(f"not a formula node: {phi!r}")


def free_vars_ordered(phi: Formula) -> list[str]:
    """Variable names in first-occurrence (left-to-right) order."""
    seen: list[str] = []

    def walk(node: Formula) -> None:
        match node:
            case Var(name) | CrispCmp(_, _, name):
                if name not in seen:
                    seen.append(name)
            case Falsum() | Verum():
                pass
            case Neg(a) | IterSum(_, a) | IterProd(_, a):
                walk(a)
            case Impl(a, b) | Or(a, b) | And(a, b) | Iff(a, b) | Oplus(a, b) | Odot(a, b) | Ominus(a, b):
                walk(a)
                walk(b)

    walk(phi)
    return seen


def contains_crisp(phi: Formula) -> bool:
    """True when any CrispCmp extension atom occurs in `phi`."""
    match phi:
        case CrispCmp():
            return True
        case Neg(a) | IterSum(_, a) | IterProd(_, a):
            return contains_crisp(a)
        case Impl(a, b) | Or(a, b) | And(a, b) | Iff(a, b) | Oplus(a, b) | Odot(a, b) | Ominus(a, b):
            return contains_crisp(a) or contains_crisp(b)
        case _:
            return False


def node_count(phi: Formula) -> int:
    """Number of AST nodes; IterSum/IterProd count as one node each."""
    match phi:
        case Var() | Falsum() | Verum() | CrispCmp():
            return 1
        case Neg(a) | IterSum(_, a) | IterProd(_, a):
            return 1 + node_count(a)
        case Impl(a, b) | Or(a, b) | And(a, b) | Iff(a, b) | Oplus(a, b) | Odot(a, b) | Ominus(a, b):
            return 1 + node_count(a) + node_count(b)
    raise TypeError(f"not a formula node: {phi!r}")

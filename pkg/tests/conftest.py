"""Shared random generators for the property suites.

All suites use seeded `random.Random` instances so failures reproduce; the
generators are plain recursive builders rather than hypothesis strategies
to keep the prescribed corpus sizes and runtimes explicit.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lukaq.formula import (
    And,
    CmpDir,
    CrispCmp,
    Falsum,
    Formula,
    Iff,
    Impl,
    IterProd,
    IterSum,
    Neg,
    Odot,
    Ominus,
    Oplus,
    Or,
    Var,
    Verum,
)

DEFAULT_VARS = ("X", "Y", "Z")

_BINARY = (Impl, Or, And, Iff, Oplus, Odot, Ominus)


def random_degree(rng: random.Random, max_denominator: int = 64) -> Fraction:
    d = rng.randint(1, max_denominator)
    return Fraction(rng.randint(0, d), d)


def random_grid_degree(rng: random.Random, denominator: int) -> Fraction:
    return Fraction(rng.randint(0, denominator), denominator)


def random_assignment(
    rng: random.Random,
    variables=DEFAULT_VARS,
    max_denominator: int = 64,
) -> dict[str, Fraction]:
    return {v: random_degree(rng, max_denominator) for v in variables}


def random_formula(
    rng: random.Random,
    variables=DEFAULT_VARS,
    depth: int = 4,
    allow_crisp: bool = False,
    max_iter: int = 6,
) -> Formula:
    """Random AST of bounded depth over the given variables."""
    if depth <= 0 or rng.random() < 0.18:
        roll = rng.random()
        if roll < 0.70:
            return Var(rng.choice(variables))
        if roll < 0.78:
            return Falsum()
        if roll < 0.86:
            return Verum()
        if allow_crisp and roll < 0.95:
            direction = rng.choice((CmpDir.GEQ, CmpDir.LEQ))
            return CrispCmp(direction, random_degree(rng, 16), rng.choice(variables))
        return Neg(Var(rng.choice(variables)))
    roll = rng.random()
    if roll < 0.12:
        return Neg(random_formula(rng, variables, depth - 1, allow_crisp, max_iter))
    if roll < 0.22:
        k = rng.randint(1, max_iter)
        return IterSum(k, random_formula(rng, variables, depth - 1, allow_crisp, max_iter))
    if roll < 0.32:
        k = rng.randint(1, max_iter)
        return IterProd(k, random_formula(rng, variables, depth - 1, allow_crisp, max_iter))
    node = rng.choice(_BINARY)
    return node(
        random_formula(rng, variables, depth - 1, allow_crisp, max_iter),
        random_formula(rng, variables, depth - 1, allow_crisp, max_iter),
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)

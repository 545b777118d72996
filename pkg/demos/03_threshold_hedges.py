#!/usr/bin/env python3
"""Walkthrough: synthesizing a hedge chain for any numeric threshold.

Any crisp query `value >= delta` over finitely many rows can be replayed by
a basic literal: a chain of k-fold bounded sums and products applied to the
column variable. The synthesizer doubles the separation interval until it
straddles 1/2, then finishes in at most two steps, so the chain length is
logarithmic in 1/(q2 - q1).
"""

from fractions import Fraction as F

from lukaq import (
    ThresholdSpec,
    apply_literal,
    bundled_normalized,
    evaluate,
    format_formula,
    literal_degree,
    simulate_geq,
    synthesize_threshold_literal,
    Var,
)

spec = ThresholdSpec(F(3, 10), F(1, 2))
literal = synthesize_threshold_literal(spec)
print(f"separating ({spec.q1}, {spec.q2}):")
print("  steps  :", [(s.op.value, s.count) for s in literal.steps])
print("  formula:", format_formula(apply_literal(literal, Var("X"))))
print("  g(0.3) =", literal_degree(literal, F(3, 10)))
print("  g(0.5) =", literal_degree(literal, F(1, 2)))
print("  g along the interval:")
for i in range(11):
    x = F(3, 10) + (F(1, 2) - F(3, 10)) * F(i, 10)
    bar = "#" * int(20 * literal_degree(literal, x))
    print(f"    g({float(x):0.2f}) = {str(literal_degree(literal, x)):>6}  {bar}")

print()
print("replaying (0.875<=X11) on the bundled cars:")
cars = bundled_normalized()
values = [w["X11"] for w in cars.worlds.values()]
literal = simulate_geq(F(7, 8), values)
phi = apply_literal(literal, Var("X11"))
print("  formula:", format_formula(phi))
crisp = {i for i, w in cars.worlds.items() if w["X11"] >= F(7, 8)}
graded = {i for i, w in cars.worlds.items() if evaluate(phi, w) == 1}
print("  crisp answer set :", sorted(crisp))
print("  hedge answer set :", sorted(graded))
print("  identical        :", crisp == graded)

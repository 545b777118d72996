#!/usr/bin/env python3
"""Walkthrough: formulas as graded queries, evaluated exactly.

Rows are possible worlds: an assignment of a [0,1] degree to every column
variable. A query formula gets a truth degree per world, computed in exact
rational arithmetic, so 0.7 - 0.2 is 1/2 and not 0.49999....
"""

from fractions import Fraction as F

from lukaq import evaluate, format_degree, parse

world = {"X11": F(9, 10), "X12": F(1, 5), "X0": F(3, 4)}
print("world:", {k: str(v) for k, v in world.items()})
print()

queries = [
    # lattice connectives: min / max, exactly like crisp and/or on answer sets
    "X11 and !X12",
    "X11 or X0",
    # monoidal connectives: bounded sum and product, the non-idempotent pair
    "X11 + X12",
    "X11 ox X0",
    # truncated difference: "much more X11 than X0"
    "X11 - X0",
    # hedges: "very" squares, "somewhat" doubles
    "X11^2",
    "2*X12",
    # iterated hedges sharpen a property into a near-threshold
    "X11^8",
    "20(X11^8)",
]

for text in queries:
    phi = parse(text)
    degree = evaluate(phi, world)
    print(f"{text:18} -> {str(degree):8} = {format_degree(degree)}")

print()
print("The same formula, desugared to the {0, var, !, ->} core:")
from lukaq import desugar, format_formula

phi = parse("X11 ox X12")
print(f"  {format_formula(phi)}  ==  {format_formula(desugar(phi))}")
print("  both evaluate to", format_degree(evaluate(desugar(phi), world)))

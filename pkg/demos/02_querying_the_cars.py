#!/usr/bin/env python3
"""Walkthrough: the bundled car dataset and the graded ranking engine.

Replays the case-study arc: a crisp threshold query, its pure-formula
simulation, progressively richer conjunctive queries, relaxation with a
"somewhat" hedge, and the truncated-difference comparison query.
"""

from lukaq import answer_set, bundled_normalized, evaluate_query, format_degree, parse


def show(title, text, limit=6):
    print(f"\n== {title}")
    print(f"   {text}")
    result = evaluate_query(parse(text), bundled, limit=limit)
    for e in result.entries:
        name = f'{e.display["manufacturer"]} {e.display["model"]} {e.display["trim"]}'
        print(f"   {e.row_id:>3}  {name:40} [{format_degree(e.degree)}]")
    return result


bundled = bundled_normalized()

crisp = show("Crisp thresholds: sub-5.1s acceleration, under 8 l/100km urban",
             "(0.875<=X11) and (X12<=0.25)")
print("   answer set:", answer_set(crisp))

graded = show("The same cars through hedges alone (degree ranks them)",
              "X11^8 and (!X12)^4")

relaxed = show("Sharpened to a 0/1 query with an iterated 'somewhat'",
               "20(X11^8 and (!X12)^4)")
print("   answer set matches the crisp query:",
      answer_set(relaxed) == answer_set(crisp))

show("Adding desires never raises degrees: cheap and small-engined too",
     "X11^2 and (!X12) and (!X0)^3 and (!X6)^2")

relaxed2 = show("Relaxing with 2*( ... ) lets near-misses reach degree 1",
                "2*(X11^2 and (!X12) and (!X0)^3 and (!X6)^2)")
print("   fully satisfied rows:", answer_set(relaxed2))

diff = show("'Much more good than expensive' (truncated difference)",
            "(X11^2 and (!X12)) - (X0)")
conj = show("...versus 'good and not expensive' (plain conjunction)",
            "X11^2 and (!X12) and (!X0)")
print("\n   best row differs:",
      diff.entries[0].row_id, "vs", conj.entries[0].row_id)

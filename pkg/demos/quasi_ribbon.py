"""Rectify a Young tableau into a quasi-ribbon tableau.

Run with ``python3 demos/quasi_ribbon.py``.
"""

from tabrw.diagrams import StringOfColumns, reading_sw, render_ascii
from tabrw.rbt import RBT, nw_rectify, rba
from tabrw.rewriting import normal_form
from tabrw.structures import Q_ROW
from tabrw.words import format_word

t = StringOfColumns(((1, 2, 3, 5), (2, 3, 4), (3, 4), (4,)), (3, 2, 1))
print("a Young tableau:")
print(render_ascii(t), "\n")

q, trace = normal_form(RBT, t, "leftmost")
for step in trace.steps:
    print(f"  {str(step.redex):<22} {step.diagram}")
print("\nquasi-ribbon normal form:")
print(render_ascii(q), "\n")

u = reading_sw(t)
assert q == rba(t) == Q_ROW.constructor(u)
print(f"same as quasi-ribbon insertion of {format_word(u)}")

# Pushing the ribbon's boxes up and left recovers a Young tableau in the
# same hypoplactic class, so rectifying again returns q.
back = nw_rectify(q)
print("\npushed north-west:")
print(render_ascii(back))
assert rba(back) == q

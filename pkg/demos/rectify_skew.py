"""Rectify a skew tableau by rewriting adjacent column pairs.

Run with ``python3 demos/rectify_skew.py``.
"""

from tabrw.diagrams import embed, render_ascii
from tabrw.jdt import FS, all_classical_rects, rect
from tabrw.rewriting import normal_form
from tabrw.structures import Y_ROW
from tabrw.words import parse_word

u = parse_word("3121312")
w = embed(u, "s")
print("start, one letter per column, each glued at its maximal skew position:")
print(render_ascii(w), "\n")

result, trace = normal_form(FS, w, "leftmost")
print(f"leftmost strategy, {len(trace.steps)} steps:")
for step in trace.steps:
    print(f"  {str(step.redex):<22} {step.diagram}")
print()
print(render_ascii(result), "\n")

# Any strategy lands on the same tableau, and that tableau is the one
# Schensted row insertion builds.
for seed in range(5):
    assert normal_form(FS, w, "random", seed)[0] == result
assert result == Y_ROW.constructor(u) == rect(w)
print("random strategies agree, and so does row insertion")

# Classical sliding, over every order of inner corners, agrees too.
print("classical sliding results:", {str(d) for d in all_classical_rects(w)})

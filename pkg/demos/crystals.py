"""Kashiwara operators acting column by column on strings of columns.

Run with ``python3 demos/crystals.py``.
"""

from tabrw.crystal import component, components_isomorphic, e, f, family
from tabrw.diagrams import StringOfColumns, reading_sw
from tabrw.jdt import rect
from tabrw.words import format_word

w = StringOfColumns(((1, 2, 4), (1, 3), (1, 4), (2, 4), (2,), (3,)), (1, 1, 2, 2, 1))
K = family("K-columns", 4)
print("w =", w)
for i in (1, 2, 3):
    for name, op in (("f", f), ("e", e)):
        print(f"  {name}_{i}(w) = {op(K, i, w)}")
print("quasi-Kashiwara operators are all undefined here:",
      all(op("qK-columns", i, w, 4) is None for i in (1, 2, 3) for op in (e, f)))

# Two different gluings of the same columns, seen through the restricted
# operators, give isomorphic components, and rectification is the map.
R = family("K-columns-restricted", 3)
x = StringOfColumns(((1,), (1, 2)), (1,))
y = StringOfColumns(((1, 2), (1,)), (1,))
for root in (x, y):
    g = component(R, root)
    print(f"\ncomponent of {root}: {len(g)} vertices")
    print("  along f1 f2 f2 f1:", " -> ".join(format_word(reading_sw(v)) for v in g.labels_along([1, 2, 2, 1])))
ok, psi = components_isomorphic(R, x, y)
print("\nisomorphic:", ok, "| the isomorphism is rect:", all(psi[v] == rect(v) for v in psi))

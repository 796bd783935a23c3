"""Plactic and hypoplactic classes, counted two ways.

Run with ``python3 demos/congruences.py``.
"""

from tabrw.congruence import classes, congruent
from tabrw.structures import Q_ROW, Y_ROW
from tabrw.words import all_words, parse_word

print("213 ~ 231 (plactic):", congruent("plactic", 3, parse_word("213"), parse_word("231")))
print("1212 ~ 2121 (plactic):", congruent("plactic", 3, parse_word("1212"), parse_word("2121")))
print("1212 ~ 2121 (hypoplactic):", congruent("hypoplactic", 3, parse_word("1212"), parse_word("2121")))
print()
print("length  plactic  tableaux  hypoplactic  quasi-ribbons")
for length in range(1, 6):
    words = list(all_words(3, length))
    young = {Y_ROW.constructor(u) for u in words}
    ribbons = {Q_ROW.constructor(u) for u in words}
    print(f"{length:>6}  {len(classes('plactic', 3, length)):>7}  {len(young):>8}  "
          f"{len(classes('hypoplactic', 3, length)):>11}  {len(ribbons):>13}")

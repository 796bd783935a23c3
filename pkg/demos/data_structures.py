"""The six string data structures, and the commutation of their insertions.

Run with ``python3 demos/data_structures.py``.
"""

from tabrw.diagrams import render_ascii
from tabrw.structures import PAIRS, SDS, check_associativity, check_commutation
from tabrw.words import parse_word

u = parse_word("3121312")
for name, S in SDS.items():
    print(f"{name} ({S.side} insertion):")
    print(render_ascii(S.constructor(u)), "\n")

for right, left in PAIRS:
    bad = check_commutation(right, left, 3, 5)
    print(f"{right.name} and {left.name} commute on words over [3] up to length 5: {not bad}")
for S in SDS.values():
    print(f"{S.name}: 200 random triples, associativity violations = "
          f"{len(check_associativity(S, 4, trials=200, seed=1))}")

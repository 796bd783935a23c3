"""String-of-columns rewriting for plactic-like monoids.

Young and quasi-ribbon tableaux, the jeu de taquin and right-bottom
rectification as two-column rewriting systems, crystal operators and
brute-force congruence oracles.
"""

from tabrw.words import Word, parse_word, format_word, weight, fac, mirror
from tabrw.diagrams import (
    StringOfColumns,
    EMPTY,
    embed,
    concat_g,
    reading_sw,
    classify,
    shape,
)

__version__ = "0.1.0"

__all__ = [
    "Word",
    "parse_word",
    "format_word",
    "weight",
    "fac",
    "mirror",
    "StringOfColumns",
    "EMPTY",
    "embed",
    "concat_g",
    "reading_sw",
    "classify",
    "shape",
]

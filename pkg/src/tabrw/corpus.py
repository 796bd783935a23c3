"""Exhaustive enumeration of small diagrams for the property suites."""

from __future__ import annotations

from itertools import combinations

from tabrw.diagrams import StringOfColumns, is_skew_shape, pair_scolc


def columns_over(n: int, max_len: int | None = None) -> list:
    top = n if max_len is None else min(n, max_len)
    return [c for k in range(1, top + 1) for c in combinations(range(1, n + 1), k)]


def _strings(n, max_boxes, gluings):
    """Depth-first over column sequences; ``gluings(prev, col)`` lists the
    allowed positions for gluing ``col`` after ``prev``."""
    cols = columns_over(n, max_boxes)
    out = []

    def grow(columns, glue, boxes):
        out.append(StringOfColumns(tuple(columns), tuple(glue)))
        for c in cols:
            if boxes + len(c) > max_boxes:
                continue
            for p in gluings(columns[-1], c):
                if pair_scolc(columns[-1], c, p):
                    grow(columns + [c], glue + [p], boxes + len(c))

    for c in cols:
        if len(c) <= max_boxes:
            grow([c], [], len(c))
    return out


def skew_tableaux(n: int, max_boxes: int, classical: bool = False) -> list:
    """Skew tableaux with at most ``max_boxes`` boxes over [n].

    With ``classical=True`` keep only genuine skew shapes, where column
    bottoms also rise weakly to the right.
    """
    got = _strings(n, max_boxes, lambda a, c: range(1, len(c) + 1))
    return [w for w in got if is_skew_shape(w)] if classical else got


def young_tableaux(n: int, max_boxes: int) -> list:
    return _strings(n, max_boxes, lambda a, c: [len(c)] if len(c) <= len(a) else [])


def quasi_ribbons(n: int, max_boxes: int) -> list:
    return _strings(n, max_boxes, lambda a, c: [len(a) + len(c) - 1])

"""Strings of columns.

A string of columns is a tuple of columns (each a strictly increasing
tuple of letters, listed top to bottom) together with a gluing sequence.
In ``c |_p c'`` the bottom box of ``c'`` sits in row ``p`` when the top box
of ``c`` is row 1. Positions are arbitrary integers, so ``p <= 0`` puts
``c'`` entirely above ``c`` and ``p >= |c| + |c'|`` puts it entirely below.

Rows are counted downward. Absolute row numbers start with the top box of
the first column at row 1 (see :meth:`StringOfColumns.tops`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from tabrw.words import Word, fac, check_word

Column = tuple


class DiagramError(ValueError):
    """Malformed string of columns or a violated precondition."""


def check_column(c: Iterable[int]) -> Column:
    c = tuple(int(x) for x in c)
    if not c:
        raise DiagramError("empty column")
    if any(a >= b for a, b in zip(c, c[1:])):
        raise DiagramError(f"column {c} is not strictly increasing")
    if c[0] < 1:
        raise DiagramError(f"column {c} has a letter below 1")
    return c


@dataclass(frozen=True)
class StringOfColumns:
    columns: tuple
    gluing: tuple

    def __post_init__(self):
        cols = tuple(check_column(c) for c in self.columns)
        glue = tuple(int(p) for p in self.gluing)
        if len(cols) and len(glue) != len(cols) - 1:
            raise DiagramError("gluing must have one entry per adjacent pair")
        if not cols and glue:
            raise DiagramError("the empty diagram has no gluing")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "gluing", glue)

    def __len__(self):
        return len(self.columns)

    def __bool__(self):
        return bool(self.columns)

    def __str__(self):
        cols = "".join("[" + ",".join(map(str, c)) + "]" for c in self.columns)
        glue = ",".join(map(str, self.gluing))
        return f"<{cols};{glue}>" if self.gluing else f"<{cols}>"

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(len(c) for c in self.columns)

    def tops(self) -> list[int]:
        """Absolute row of the top box of every column."""
        if not self.columns:
            return []
        t = [1]
        for p, c in zip(self.gluing, self.columns[1:]):
            t.append(t[-1] + p - len(c))
        return t

    @classmethod
    def from_tops(cls, columns: Sequence[Sequence[int]], tops: Sequence[int]):
        """Rebuild from columns and absolute top rows (any common offset)."""
        columns = [tuple(c) for c in columns]
        glue = [t2 - t1 + len(c2) for t1, t2, c2 in zip(tops, tops[1:], columns[1:])]
        return cls(tuple(columns), tuple(glue))

    def placed(self) -> list[tuple[Column, int]]:
        return list(zip(self.columns, self.tops()))


EMPTY = StringOfColumns((), ())


def column(*entries: int) -> StringOfColumns:
    """A single column as a string of columns."""
    return StringOfColumns((tuple(entries),), ())


# -- gluing maps ---------------------------------------------------------

def glue_skew(c, c2) -> int:
    return 1


def glue_young(c, c2) -> int:
    return len(c2)


def glue_ribbon(c, c2) -> int:
    return len(c) + len(c2) - 1


GLUING_MAPS: dict[str, Callable] = {
    "s": glue_skew,
    "young": glue_young,
    "q": glue_ribbon,
}


def _gluing(g) -> Callable:
    if callable(g):
        return g
    try:
        return GLUING_MAPS[g]
    except KeyError:
        raise DiagramError(f"unknown gluing map {g!r}") from None


def embed(u: Sequence[int], g="s") -> StringOfColumns:
    """Cut ``u`` into decreasing factors and glue them as columns with ``g``."""
    g = _gluing(g)
    cols = [tuple(reversed(f)) for f in fac(check_word(u))]
    glue = [g(a, b) for a, b in zip(cols, cols[1:])]
    return StringOfColumns(tuple(cols), tuple(glue))


def concat_g(w1: StringOfColumns, w2: StringOfColumns, g="s") -> StringOfColumns:
    if not w1:
        return w2
    if not w2:
        return w1
    seam = _gluing(g)(w1.columns[-1], w2.columns[0])
    return StringOfColumns(w1.columns + w2.columns, w1.gluing + (seam,) + w2.gluing)


def reading_sw(w: StringOfColumns) -> Word:
    """Columns left to right, each read bottom to top."""
    out: list[int] = []
    for c in w.columns:
        out.extend(reversed(c))
    return tuple(out)


# -- pair geometry -------------------------------------------------------
# For a pair c |_p c2, rows are relative to c: c occupies rows 1..|c| and
# c2 occupies rows p-|c2|+1 .. p.

def overlaps(c, c2, p: int) -> bool:
    return 1 <= p <= len(c) + len(c2) - 1


def shared_rows(c, c2, p: int):
    """Pairs (entry of c, entry of c2) on the rows both columns occupy."""
    top2 = p - len(c2) + 1
    for r in range(max(1, top2), min(len(c), p) + 1):
        yield c[r - 1], c2[r - top2]


def pair_increasing(c, c2, p: int) -> bool:
    return all(a <= b for a, b in shared_rows(c, c2, p))


def pair_scolc(c, c2, p: int) -> bool:
    """Row connected and row increasing."""
    return overlaps(c, c2, p) and pair_increasing(c, c2, p)


def max_scolc_gluing(c, c2) -> int:
    """Largest gluing keeping the pair row connected and row increasing.

    Row increasingness only gets harder as ``c2`` moves down, so the valid
    gluings form an interval ``1..G``. Returns 0 when there is none.
    """
    best = 0
    for p in range(1, len(c) + len(c2)):
        if not pair_increasing(c, c2, p):
            break
        best = p
    return best


# -- predicates ----------------------------------------------------------

def _pairs(w):
    return zip(w.columns, w.columns[1:], w.gluing)


def is_row_connected(w: StringOfColumns) -> bool:
    return all(overlaps(a, b, p) for a, b, p in _pairs(w))


def is_row_increasing(w: StringOfColumns) -> bool:
    return all(pair_increasing(a, b, p) for a, b, p in _pairs(w))


def is_scolc(w: StringOfColumns) -> bool:
    return is_row_connected(w) and is_row_increasing(w)


def is_skew(w: StringOfColumns) -> bool:
    return is_scolc(w) and all(p <= len(b) for a, b, p in _pairs(w))


def is_diagonal_skew(w: StringOfColumns) -> bool:
    return is_skew(w) and all(p == 1 for p in w.gluing)


def is_young(w: StringOfColumns) -> bool:
    return is_scolc(w) and all(
        p == len(b) and len(b) <= len(a) for a, b, p in _pairs(w)
    )


def is_quasi_ribbon(w: StringOfColumns) -> bool:
    # no monotonicity of the gluing sequence is required here
    return is_scolc(w) and all(p == len(a) + len(b) - 1 for a, b, p in _pairs(w))


def is_skew_shape(w: StringOfColumns) -> bool:
    """Skew in the classical sense: tops and bottoms both rise to the right."""
    if not is_scolc(w):
        return False
    t = w.tops()
    bottoms = [ti + len(c) - 1 for ti, c in zip(t, w.columns)]
    return all(x >= y for x, y in zip(t, t[1:])) and all(
        x >= y for x, y in zip(bottoms, bottoms[1:])
    )


def classify(w: StringOfColumns) -> frozenset:
    flags = set()
    connected = is_row_connected(w)
    if connected:
        flags.add("row-connected")
    if is_row_increasing(w):
        flags.add("row-increasing")
    if is_skew(w):
        flags.add("skew")
    if is_diagonal_skew(w):
        flags.add("diagonal-skew")
    if is_young(w):
        flags.add("young")
    if is_quasi_ribbon(w):
        flags.add("quasi-ribbon")
    pairs = list(_pairs(w))
    if connected:
        if all(len(a) >= len(b) and len(b) <= p <= len(a) for a, b, p in pairs):
            flags.add("left-justified")
        if all(len(b) >= len(a) and len(a) <= p <= len(b) for a, b, p in pairs):
            flags.add("right-justified")
        if all(p == len(b) for a, b, p in pairs):
            flags.add("top-justified")
        if all(p == len(a) for a, b, p in pairs):
            flags.add("bottom-justified")
    g = w.gluing
    if all(x >= y for x, y in zip(g, g[1:])):
        flags.add("decreasing")
    if all(x <= y for x, y in zip(g, g[1:])):
        flags.add("increasing")
    return frozenset(flags)


def shape(w: StringOfColumns) -> tuple[int, ...]:
    """Number of boxes in each occupied row, top to bottom."""
    if not is_row_connected(w):
        raise DiagramError("shape needs a row connected string of columns")
    counts: dict[int, int] = {}
    for (r, _c) in to_grid(w):
        counts[r] = counts.get(r, 0) + 1
    return tuple(counts[r] for r in sorted(counts))


# -- grid view -----------------------------------------------------------

def to_grid(w: StringOfColumns) -> dict:
    """Map (row, col) -> entry, rows counted from the topmost occupied row."""
    tops = w.tops()
    if not tops:
        return {}
    t0 = min(tops)
    grid = {}
    for j, (c, t) in enumerate(zip(w.columns, tops), start=1):
        for k, x in enumerate(c):
            grid[(t - t0 + 1 + k, j)] = x
    return grid


def from_grid(grid: dict) -> StringOfColumns:
    """Inverse of :func:`to_grid`; every grid column must be a solid run."""
    if not grid:
        return EMPTY
    by_col: dict[int, list] = {}
    for (r, j), x in grid.items():
        by_col.setdefault(j, []).append((r, x))
    cols, tops = [], []
    for j in sorted(by_col):
        cells = sorted(by_col[j])
        rows = [r for r, _ in cells]
        if rows != list(range(rows[0], rows[0] + len(rows))):
            raise DiagramError(f"grid column {j} has a gap")
        cols.append(tuple(x for _, x in cells))
        tops.append(rows[0])
    return StringOfColumns.from_tops(cols, tops)


def bounding_box(grid: dict) -> tuple[int, int, int, int]:
    rows = [r for r, _ in grid]
    cols = [c for _, c in grid]
    return min(rows), max(rows), min(cols), max(cols)


def render_ascii(w: StringOfColumns) -> str:
    grid = to_grid(w)
    if not grid:
        return ""
    r0, r1, c0, c1 = bounding_box(grid)
    wide = max(len(str(x)) for x in grid.values())
    sep = "" if wide == 1 else " "
    lines = []
    for r in range(r0, r1 + 1):
        cells = []
        for c in range(c0, c1 + 1):
            x = grid.get((r, c))
            cells.append(" " * wide if x is None else str(x).rjust(wide))
        lines.append(sep.join(cells).rstrip())
    return "\n".join(lines)


# -- JSON ----------------------------------------------------------------

def to_json_obj(w: StringOfColumns, n: int) -> dict:
    return {"n": n, "columns": [list(c) for c in w.columns], "gluing": list(w.gluing)}


def to_json(w: StringOfColumns, n: int) -> str:
    return json.dumps(to_json_obj(w, n))


def from_json_obj(obj: dict) -> tuple[StringOfColumns, int]:
    try:
        n = int(obj["n"])
        w = StringOfColumns(tuple(map(tuple, obj["columns"])), tuple(obj["gluing"]))
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"bad diagram JSON: {exc}") from None
    for c in w.columns:
        if c[-1] > n:
            raise DiagramError(f"letter {c[-1]} exceeds n={n}")
    return w, n


def from_json(text: str) -> tuple[StringOfColumns, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"bad diagram JSON: {exc}") from None
    return from_json_obj(obj)


# -- termination measures ------------------------------------------------

def top_deviation(w: StringOfColumns) -> tuple[int, ...]:
    """Empty cells between each column's top box and the diagram's top row."""
    tops = w.tops()
    if not tops:
        return ()
    t0 = min(tops)
    return tuple(t - t0 for t in tops)


def total_deviation(w: StringOfColumns) -> tuple[int, ...]:
    return tuple(len(a) + len(b) - p for a, b, p in _pairs(w))


def tl_measure(w: StringOfColumns) -> tuple:
    """Sort key for the top-left order: column count, reverse-lex lengths,
    then top deviation."""
    lengths = tuple(len(c) for c in w.columns)
    return (len(w), tuple(reversed(lengths)), top_deviation(w))


def ribbon_offset(w: StringOfColumns) -> tuple[int, ...]:
    """How far each gluing sits from the quasi-ribbon gluing, as |d - 1|
    with d the deviation of the pair."""
    return tuple(abs(d - 1) for d in total_deviation(w))


def rb_measure(w: StringOfColumns) -> tuple:
    """Sort key for the right-bottom order: reading, column count, then the
    per-window distance from a quasi-ribbon join."""
    return (reading_sw(w), len(w), ribbon_offset(w))


def compare(a, b) -> int:
    return (a > b) - (a < b)

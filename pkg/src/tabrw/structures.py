"""String data structures: a carrier of diagrams, a one-letter insertion
and the south-west reading.

Six instances are provided. Diagonal skew tableaux with top and bottom
concatenation, Young tableaux with Schensted row and column insertion, and
quasi-ribbon tableaux with right and left quasi-ribbon insertion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from tabrw import diagrams as dg
from tabrw.diagrams import EMPTY, StringOfColumns, reading_sw
from tabrw.words import Word, check_word, mirror, words_up_to


class CarrierError(ValueError):
    """A diagram is outside the carrier of the structure."""


# -- row views -----------------------------------------------------------

def rows_of(w: StringOfColumns) -> list[tuple[int, ...]]:
    """Entries of every occupied row, top to bottom, left to right."""
    grid = dg.to_grid(w)
    rows: dict[int, list] = {}
    for (r, c) in sorted(grid):
        rows.setdefault(r, []).append(grid[(r, c)])
    return [tuple(rows[r]) for r in sorted(rows)]


def young_from_rows(rows: Sequence[Sequence[int]]) -> StringOfColumns:
    rows = [tuple(r) for r in rows if r]
    if not rows:
        return EMPTY
    grid = {(i + 1, j + 1): x for i, r in enumerate(rows) for j, x in enumerate(r)}
    return dg.from_grid(grid)


def young_from_columns(cols: Sequence[Sequence[int]]) -> StringOfColumns:
    cols = [tuple(c) for c in cols if c]
    return StringOfColumns.from_tops(cols, [1] * len(cols)) if cols else EMPTY


def ribbon_from_rows(rows: Sequence[Sequence[int]]) -> StringOfColumns:
    """Glue rows as a ribbon: the last box of each row sits over the first
    box of the next."""
    rows = [tuple(r) for r in rows if r]
    for a, b in zip(rows, rows[1:]):
        if not a[-1] < b[0]:
            raise CarrierError(f"cannot stack row {b} under row {a}")
    grid = {}
    start = 1
    for i, r in enumerate(rows, start=1):
        for j, x in enumerate(r):
            grid[(i, start + j)] = x
        start += len(r) - 1
    return dg.from_grid(grid) if grid else EMPTY


# -- single-letter insertions -------------------------------------------

def row_insert(row: tuple, x: int):
    """Schensted row insertion: bump the smallest y with x < y."""
    for k, y in enumerate(row):
        if x < y:
            return row[:k] + (x,) + row[k + 1:], y
    return row + (x,), None


def column_insert(col: tuple, x: int):
    """Column insertion: bump the smallest y with x <= y."""
    for k, y in enumerate(col):
        if x <= y:
            return col[:k] + (x,) + col[k + 1:], y
    return col + (x,), None


def right_insert_young(t: StringOfColumns, x: int) -> StringOfColumns:
    rows = rows_of(t)
    out = []
    y = x
    while y is not None:
        if not rows:
            out.append((y,))
            break
        r = rows.pop(0)
        r2, y = row_insert(r, y)
        out.append(r2)
    return young_from_rows(out + rows)


def left_insert_young(t: StringOfColumns, x: int) -> StringOfColumns:
    cols = list(t.columns)
    out = []
    y = x
    while y is not None:
        if not cols:
            out.append((y,))
            break
        c = cols.pop(0)
        c2, y = column_insert(c, y)
        out.append(c2)
    return young_from_columns(out + cols)


def right_insert_ribbon(q: StringOfColumns, x: int) -> StringOfColumns:
    rows = rows_of(q)
    if not rows:
        return ribbon_from_rows([(x,)])
    if x < rows[0][0]:
        return ribbon_from_rows([(x,)] + rows)
    for i in range(len(rows) - 1, -1, -1):
        row = rows[i]
        for j in range(len(row) - 1, -1, -1):
            if x >= row[j]:
                r = row[: j + 1] + (x,)
                rest = row[j + 1:]
                return ribbon_from_rows(rows[:i] + [r] + [rest] + rows[i + 1:])
    raise AssertionError("unreachable: x >= first entry was checked")


def left_insert_ribbon(q: StringOfColumns, x: int) -> StringOfColumns:
    rows = rows_of(q)
    if not rows or x > rows[-1][-1]:
        return ribbon_from_rows(rows + [(x,)])
    for i, row in enumerate(rows):
        for j, y in enumerate(row):
            if x <= y:
                r = (x,) + row[j:]
                head = row[:j]
                return ribbon_from_rows(rows[:i] + [head] + [r] + rows[i + 1:])
    raise AssertionError("unreachable: x <= last entry was checked")


def top_concat(w: StringOfColumns, x: int) -> StringOfColumns:
    """Top concatenation on the last column."""
    if not w:
        return dg.column(x)
    c = w.columns[-1]
    if x >= c[0]:
        return StringOfColumns(w.columns + ((x,),), w.gluing + (1,))
    return StringOfColumns(w.columns[:-1] + ((x,) + c,), w.gluing)


def bottom_concat(w: StringOfColumns, x: int) -> StringOfColumns:
    """Bottom concatenation on the first column."""
    if not w:
        return dg.column(x)
    c = w.columns[0]
    if x > c[-1]:
        return StringOfColumns((c + (x,),) + w.columns[1:], w.gluing)
    return StringOfColumns(((x,),) + w.columns, (1,) + w.gluing)


# -- the abstraction -----------------------------------------------------

@dataclass(frozen=True)
class StringDataStructure:
    name: str
    side: str  # "right" inserts at the end of the word, "left" at the start
    carrier: Callable[[StringOfColumns], bool]
    one: Callable[[StringOfColumns, int], StringOfColumns]

    def __repr__(self):
        return f"<SDS {self.name}>"

    def in_carrier(self, d: StringOfColumns) -> bool:
        return not d or self.carrier(d)

    def insert(self, d: StringOfColumns, x: int, check: bool = False) -> StringOfColumns:
        if check and not self.in_carrier(d):
            raise CarrierError(f"{d} is not in the carrier of {self.name}")
        return self.one(d, x)

    def reading(self, d: StringOfColumns) -> Word:
        return reading_sw(d)

    def constructor(self, u: Sequence[int]) -> StringOfColumns:
        d = EMPTY
        letters = check_word(u)
        if self.side == "left":
            letters = mirror(letters)
        for x in letters:
            d = self.one(d, x)
        return d

    def insert_word(self, d: StringOfColumns, u: Sequence[int]) -> StringOfColumns:
        """Insert the letters of ``u`` on this structure's side of ``d``."""
        letters = mirror(u) if self.side == "left" else tuple(u)
        for x in letters:
            d = self.one(d, x)
        return d

    def product(self, d: StringOfColumns, d2: StringOfColumns) -> StringOfColumns:
        if self.side == "right":
            return self.insert_word(d, reading_sw(d2))
        return self.insert_word(d2, reading_sw(d))


DSK_ROW = StringDataStructure("dskrow", "right", dg.is_diagonal_skew, top_concat)
DSK_COL = StringDataStructure("dskcol", "left", dg.is_diagonal_skew, bottom_concat)
Y_ROW = StringDataStructure("yrow", "right", dg.is_young, right_insert_young)
Y_COL = StringDataStructure("ycol", "left", dg.is_young, left_insert_young)
Q_ROW = StringDataStructure("qrow", "right", dg.is_quasi_ribbon, right_insert_ribbon)
Q_LEFT = StringDataStructure("qleft", "left", dg.is_quasi_ribbon, left_insert_ribbon)

SDS = {s.name: s for s in (DSK_ROW, DSK_COL, Y_ROW, Y_COL, Q_ROW, Q_LEFT)}

PAIRS = [(DSK_ROW, DSK_COL), (Y_ROW, Y_COL), (Q_ROW, Q_LEFT)]


def get_sds(name) -> StringDataStructure:
    if isinstance(name, StringDataStructure):
        return name
    try:
        return SDS[name.lower().replace("_", "")]
    except KeyError:
        raise KeyError(f"unknown structure {name!r}; pick one of {sorted(SDS)}") from None


def carrier_elements(S: StringDataStructure, n: int, maxlen: int) -> dict:
    """Distinct constructor images over all words up to ``maxlen``."""
    seen: dict = {}
    for u in words_up_to(n, maxlen):
        seen.setdefault(S.constructor(u), u)
    return seen


# -- law checks ----------------------------------------------------------

def check_axioms(S: StringDataStructure, n: int, maxlen: int) -> list:
    """Violations of the three structure axioms over words up to maxlen."""
    bad = []
    for x in range(1, n + 1):
        if reading_sw(S.one(EMPTY, x)) != (x,):
            bad.append(("single-letter", x))
    by_reading: dict = {}
    for d in carrier_elements(S, n, maxlen):
        if d and not S.carrier(d):
            bad.append(("carrier", d))
        if S.constructor(reading_sw(d)) != d:
            bad.append(("round-trip", d))
        r = reading_sw(d)
        if r in by_reading and by_reading[r] != d:
            bad.append(("injective", d, by_reading[r]))
        by_reading[r] = d
    if reading_sw(EMPTY) != ():
        bad.append(("empty", EMPTY))
    return bad


def check_commutation(right: StringDataStructure, left: StringDataStructure,
                      n: int, maxlen: int) -> list:
    """Witnesses (d, x, y) where y <| (d |> x) differs from (y <| d) |> x."""
    bad = []
    for d in carrier_elements(right, n, maxlen):
        for x in range(1, n + 1):
            dx = right.one(d, x)
            for y in range(1, n + 1):
                if left.one(dx, y) != right.one(left.one(d, y), x):
                    bad.append((d, x, y))
    return bad


def random_element(S: StringDataStructure, n: int, maxlen: int, rng: random.Random):
    k = rng.randint(0, maxlen)
    return S.constructor([rng.randint(1, n) for _ in range(k)])


def check_associativity(S: StringDataStructure, n: int, trials: int = 200,
                        maxlen: int = 5, seed: int = 0) -> list:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        a, b, c = (random_element(S, n, maxlen, rng) for _ in range(3))
        if S.product(S.product(a, b), c) != S.product(a, S.product(b, c)):
            bad.append((a, b, c))
    return bad

"""Right-bottom rectification of Young tableaux into quasi-ribbon tableaux.

Same window notation as :mod:`tabrw.jdt`: left column ``A`` (length
``k``, top ``a``), right column ``B`` (length ``l``, top ``b``), relative
gluing ``G = b - a + l`` and ``Gmax`` the lowest valid gluing (0 if none).
Rows of the window are counted from ``A``'s top box, which is row 1, so
``B`` covers rows ``G - l + 1 .. G``.

The pair is in normal position when it is a quasi-ribbon join, that is
``G = k + l - 1`` with ``A[-1] <= B[0]``. Every other pair matches
exactly one of the four rules:

* ``alpha``: valid pair that can be split. With ``n`` the first row such
  that ``B`` has a box at row ``n`` smaller than ``A``'s box at ``n + 1``,
  the part of ``A`` from row ``n + 1`` moves one column right, and the part
  of ``B`` below row ``n`` moves one more column right.
* ``delta_alpha``: invalid pair. ``B`` moves to ``Gmax``, then ``alpha``.
  At ``Gmax = 0`` this stacks ``B`` on top of ``A`` as a single column.
* ``gamma``: valid (or entirely above, with ``A[0] <= B[-1]``) and not at
  the lowest valid gluing. ``B`` moves down to ``Gmax``.
* ``delta``: ``B`` starts below ``A`` with ``A[-1] <= B[0]``. ``B`` moves
  up until its top box sits beside ``A``'s bottom box.
"""

from __future__ import annotations

from tabrw.diagrams import (
    EMPTY,
    DiagramError,
    StringOfColumns,
    embed,
    is_quasi_ribbon,
    is_young,
    max_scolc_gluing,
    pair_scolc,
    rb_measure,
    reading_sw,
    to_grid,
)
from tabrw.rewriting import RewriteSystem, Rule, normal_form
from tabrw.structures import Q_LEFT, Q_ROW, Y_ROW, young_from_rows


def _g(A, a, B, b) -> int:
    return b - a + len(B)


def _split(A, a, B, b, G):
    """Split the window at relative gluing ``G`` (with ``B`` placed there)."""
    k, l = len(A), len(B)
    first = G - l + 1  # relative row of B's top box
    b = a + first - 1
    for n in range(max(first, 0), min(G, k - 1) + 1):
        if B[n - first] < A[n]:
            upper, lower = B[: n - first + 1], B[n - first + 1:]
            return [(A[:n], a), (upper + A[n:], b), (lower, a + n)]
    return None


def rb_alpha(A, a, B, b):
    G = _g(A, a, B, b)
    if pair_scolc(A, B, G):
        return _split(A, a, B, b, G)
    return None


def rb_delta_alpha(A, a, B, b):
    G = _g(A, a, B, b)
    k, l = len(A), len(B)
    if pair_scolc(A, B, G):
        return None
    gm = max_scolc_gluing(A, B)
    if G >= 1 and G > gm:
        pass
    elif G <= 0 and gm == 0 and not A[0] <= B[-1]:
        pass
    else:
        return None
    if G > k + l - 1 and A[-1] <= B[0]:
        return None  # a delta case
    if gm == 0:
        return [(B + A, a - l)]
    return _split(A, a, B, b, gm)


def rb_gamma(A, a, B, b):
    G = _g(A, a, B, b)
    if not (pair_scolc(A, B, G) or (G <= 0 and A[0] <= B[-1])):
        return None
    gm = max_scolc_gluing(A, B)
    if gm > G:
        return [(A, a), (B, b + (gm - G))]
    return None


def rb_delta(A, a, B, b):
    G = _g(A, a, B, b)
    top = len(A) + len(B) - 1
    if G > top and A[-1] <= B[0]:
        return [(A, a), (B, b - (G - top))]
    return None


RBT_RULES = (
    Rule("alpha", "RS_a", rb_alpha),
    Rule("delta_alpha", "RS_b", rb_delta_alpha),
    Rule("gamma", "BS", rb_gamma),
    Rule("delta", "TS", rb_delta),
)

# Splits lower the reading, stacking lowers the column count, and the
# pure moves bring one gluing closer to the ribbon position, so the
# right-bottom key strictly decreases.
RBT = RewriteSystem("RBT", RBT_RULES, "hypoplactic", rb_measure, direction=-1)


def rbt_rules() -> RewriteSystem:
    return RBT


def _is_young_embedding(t: StringOfColumns) -> bool:
    return t == embed(reading_sw(t), "young")


def rba(t: StringOfColumns, strategy: str = "leftmost", seed=None) -> StringOfColumns:
    """Rectify a Young tableau (or a Young-glued word) to a quasi-ribbon."""
    if t and not (is_young(t) or _is_young_embedding(t)):
        raise DiagramError(f"{t} is neither a Young tableau nor a Young-glued word")
    return normal_form(RBT, t, strategy, seed)[0]


def nw_rectify(q: StringOfColumns) -> StringOfColumns:
    """Push every column of a quasi-ribbon to the top, then every box left."""
    if not q:
        return EMPTY
    if not is_quasi_ribbon(q):
        raise DiagramError(f"{q} is not a quasi-ribbon tableau")
    grid = to_grid(StringOfColumns.from_tops(q.columns, [1] * len(q)))
    rows: dict = {}
    for (r, c) in sorted(grid):
        rows.setdefault(r, []).append(grid[(r, c)])
    return young_from_rows([rows[r] for r in sorted(rows)])


def rba_morphism_check(corpus, n: int) -> dict:
    """Mismatches of rba(t <| x) = rba(t) <| x over Young tableaux built
    from the words in ``corpus``, for every letter x of [n]."""
    bad = []
    for u in corpus:
        t = Y_ROW.constructor(u)
        q = rba(t)
        for x in range(1, n + 1):
            if rba(Y_ROW.one(t, x)) != Q_ROW.one(q, x):
                bad.append((tuple(u), x))
    return {"checked": len(corpus) * n, "mismatches": bad}


def leftmost_is_qrow(corpus) -> list:
    return [u for u in corpus if rba(embed(u, "young"), "leftmost") != Q_ROW.constructor(u)]


def rightmost_is_qleft(corpus) -> list:
    return [u for u in corpus if rba(embed(u, "young"), "rightmost") != Q_LEFT.constructor(u)]

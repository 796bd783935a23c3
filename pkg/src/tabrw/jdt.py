"""Jeu de taquin as a two-column rewriting system, plus a classical oracle.

Window notation used by every rule: the left column ``A`` (length ``k``,
absolute top row ``a``) and the right column ``B`` (length ``l``, top
``b``). The relative gluing ``G = b - a + l`` is the row of ``B``'s bottom
box counted from ``A``'s top box. ``Gmax`` is the largest gluing at which
the pair is row connected and row increasing (0 if none).

The six rules, in the order they are tried:

* ``alpha``: valid pair, ``B`` starts at or above ``A`` and hangs below
  it. The hanging tail of ``B`` moves under ``A``.
* ``delta_alpha``: invalid pair with ``k < Gmax < l``. ``B`` moves up to
  ``Gmax``, then ``alpha``.
* ``beta``: valid pair, ``B`` starts strictly above ``A`` and ends no
  lower than ``A``. A hole above ``A`` slides down ``A`` until a box of
  ``B`` is smaller than the box below the hole; that box of ``B`` moves
  left into the hole and the rest of ``B`` closes up.
* ``delta_beta``: invalid pair with ``Gmax <= k`` and ``Gmax < l``. ``B``
  moves to ``Gmax``, then ``beta``.
* ``gamma``: ``B`` starts above ``A``, and the pair is valid or lies
  entirely above with ``A[0] <= B[-1]``. ``A`` moves up to the highest
  valid spot with ``B``'s top still at or above ``A``'s top.
* ``delta``: ``B`` starts below ``A`` and the top-aligned pair is valid.
  ``B`` moves up to align tops.
"""

from __future__ import annotations

from typing import Callable

from tabrw.diagrams import (
    EMPTY,
    StringOfColumns,
    DiagramError,
    from_grid,
    is_skew,
    is_skew_shape,
    is_young,
    max_scolc_gluing,
    pair_scolc,
    tl_measure,
    to_grid,
    glue_young,
)
from tabrw.rewriting import RewriteSystem, Rule, normal_form
from tabrw.structures import Y_COL, Y_ROW, young_from_columns


def _g(A, a, B, b) -> int:
    return b - a + len(B)


def _alpha_move(A, a, B, b):
    cut = a + len(A) - b  # index in B of the first box below A
    return [(A + B[cut:], a), (B[:cut], b)]


def _beta_move(A, a, B, b):
    k = len(A)
    for rho in range(k + 1):
        row = a - 1 + rho
        below = A[rho] if rho < k else None
        right = B[row - b] if b <= row < b + len(B) else None
        if right is not None and (below is None or right < below):
            i = row - b
            return [(A[:rho] + (right,) + A[rho:], a - 1), (B[:i] + B[i + 1:], b)]
        if below is None:
            return None
    return None


def fs_alpha(A, a, B, b):
    G = _g(A, a, B, b)
    if b <= a and G > len(A) and pair_scolc(A, B, G):
        return _alpha_move(A, a, B, b)
    return None


def fs_delta_alpha(A, a, B, b):
    G = _g(A, a, B, b)
    if pair_scolc(A, B, G):
        return None
    gm = max_scolc_gluing(A, B)
    if len(A) < gm < len(B) and G > gm:
        return _alpha_move(A, a, B, b - (G - gm))
    return None


def fs_beta(A, a, B, b):
    G = _g(A, a, B, b)
    if b < a and G <= len(A) and pair_scolc(A, B, G):
        return _beta_move(A, a, B, b)
    return None


def fs_delta_beta(A, a, B, b):
    G = _g(A, a, B, b)
    if pair_scolc(A, B, G):
        return None
    gm = max_scolc_gluing(A, B)
    if gm <= len(A) and gm < len(B) and (G > gm or gm == 0):
        return _beta_move(A, a, B, b - (G - gm))
    return None


def fs_gamma(A, a, B, b):
    G = _g(A, a, B, b)
    l = len(B)
    if not ((G < l and pair_scolc(A, B, G)) or (G <= 0 and A[0] <= B[-1])):
        return None
    s = min(max_scolc_gluing(A, B), l)
    if s > G:
        return [(A, a - (s - G)), (B, b)]
    return None


def fs_delta(A, a, B, b):
    if b > a and max_scolc_gluing(A, B) >= len(B):
        return [(A, a), (B, a)]
    return None


FS_RULES = (
    Rule("alpha", "LS_a", fs_alpha),
    Rule("delta_alpha", "LS_b", fs_delta_alpha),
    Rule("beta", "IS_a", fs_beta),
    Rule("delta_beta", "IS_b", fs_delta_beta),
    Rule("gamma", "TS_a", fs_gamma),
    Rule("delta", "TS_b", fs_delta),
)

FS = RewriteSystem("FS", FS_RULES, "plactic", tl_measure, direction=-1)


def fs_rules() -> RewriteSystem:
    return FS


def rect(w: StringOfColumns, strategy: str = "leftmost", seed=None) -> StringOfColumns:
    """Rectify a skew tableau into a Young tableau."""
    if w and not is_skew(w):
        raise DiagramError(f"{w} is not a skew tableau")
    return normal_form(FS, w, strategy, seed)[0]


# -- classical forward sliding -------------------------------------------

def inner_shape(grid: dict) -> list:
    """The inner partition of a skew grid, one entry per row from row 1."""
    if not grid:
        return []
    last = max(r for r, _ in grid)
    return [min((c for rr, c in grid if rr == r), default=1) - 1 for r in range(1, last + 1)]


def inner_corners(mu: list) -> list:
    """Removable corners of the inner partition ``mu``."""
    return [
        (r + 1, m) for r, m in enumerate(mu)
        if m >= 1 and (mu[r + 1] if r + 1 < len(mu) else 0) < m
    ]


def forward_slide(grid: dict, corner) -> dict:
    """Slide the hole at ``corner`` until it leaves through an outer corner."""
    g = dict(grid)
    r, c = corner
    while True:
        below = g.get((r + 1, c))
        right = g.get((r, c + 1))
        if below is None and right is None:
            return g
        if right is None or (below is not None and below <= right):
            g[(r, c)] = below
            del g[(r + 1, c)]
            r += 1
        else:
            g[(r, c)] = right
            del g[(r, c + 1)]
            c += 1


def _slide(grid, mu, corner):
    mu = list(mu)
    mu[corner[0] - 1] -= 1
    return forward_slide(grid, corner), mu


def _check_skew_grid(w: StringOfColumns) -> dict:
    if w and not is_skew_shape(w):
        raise DiagramError(f"{w} does not have a skew shape")
    return to_grid(w)


def classical_rect(w: StringOfColumns, choose: Callable | None = None,
                   history: list | None = None) -> StringOfColumns:
    """Rectify by forward slides; ``choose`` picks among the inner corners."""
    grid = _check_skew_grid(w)
    mu = inner_shape(grid)
    while True:
        corners = inner_corners(mu)
        if not corners:
            break
        corner = choose(corners) if choose else corners[0]
        grid, mu = _slide(grid, mu, corner)
        if history is not None:
            history.append(from_grid(grid))
    return from_grid(grid) if grid else EMPTY


def all_classical_rects(w: StringOfColumns) -> set:
    """Results over every possible order of inner-corner choices."""
    start = _check_skew_grid(w)
    if not start:
        return {EMPTY}
    results = set()
    seen = set()
    todo = [(start, inner_shape(start))]
    while todo:
        grid, mu = todo.pop()
        key = (frozenset(grid.items()), tuple(mu))
        if key in seen:
            continue
        seen.add(key)
        corners = inner_corners(mu)
        if not corners:
            results.add(from_grid(grid))
        for corner in corners:
            todo.append(_slide(grid, mu, corner))
    return results


# -- insertion versus normalization --------------------------------------

def leftmost_is_schensted(corpus) -> list:
    """Words whose leftmost FS normal form differs from row insertion."""
    from tabrw.diagrams import embed

    return [u for u in corpus if rect(embed(u, "s"), "leftmost") != Y_ROW.constructor(u)]


def rightmost_is_left_schensted(corpus) -> list:
    from tabrw.diagrams import embed

    return [u for u in corpus if rect(embed(u, "s"), "rightmost") != Y_COL.constructor(u)]


# -- column involution ---------------------------------------------------

def column_involution(c, n: int) -> tuple:
    """The letters of [n] missing from ``c``."""
    return tuple(x for x in range(1, n + 1) if x not in set(c))


def diagram_involution(w: StringOfColumns, n: int, width: int | None = None) -> StringOfColumns:
    """Reverse the columns and complement each one; glue as a Young tableau.

    ``width`` pads ``w`` on the right with empty columns first, whose
    complement is the full column [n]. A product of r columns should be
    read with ``width=r``. Columns that come out empty are dropped.
    """
    cols = list(w.columns)
    if width is not None:
        cols += [()] * (width - len(cols))
    out = [column_involution(c, n) for c in reversed(cols)]
    return young_from_columns([c for c in out if c])

import itertools

import pytest
from hypothesis import given, strategies as st

from tabrw.corpus import columns_over, skew_tableaux, young_tableaux
from tabrw.diagrams import (
    EMPTY, DiagramError, StringOfColumns, embed, is_young, reading_sw, render_ascii,
)
from tabrw.jdt import (
    FS, all_classical_rects, classical_rect, column_involution, diagram_involution, fs_rules,
    inner_corners, inner_shape, leftmost_is_schensted, rect, rightmost_is_left_schensted,
)
from tabrw.rewriting import Redex, find_redexes, normal_form, replay, try_apply
from tabrw.structures import Y_ROW, young_from_columns
from tabrw.words import parse_word, words_up_to

SKEW_INTRO = embed(parse_word("3121312"), "s")
YOUNG_INTRO = StringOfColumns(((1, 2, 3), (1, 3), (1,), (2,)), (2, 1, 1))


def test_system_metadata():
    sys_ = fs_rules()
    assert sys_ is FS and sys_.congruence == "plactic"
    assert [r.family for r in sys_.rules] == ["LS_a", "LS_b", "IS_a", "IS_b", "TS_a", "TS_b"]


def test_alpha_moves_the_hanging_tail():
    w = StringOfColumns(((1, 2), (1, 2, 3)), (3,))
    assert find_redexes(FS, w) == [Redex("alpha", 1)]
    assert try_apply(FS, w, Redex("alpha", 1)) == StringOfColumns(((1, 2, 3), (1, 2)), (2,))


def test_each_rule_fires_somewhere():
    fired = set()
    for u in words_up_to(3, 5):
        trace = normal_form(FS, embed(u, "s"), "rightmost")[1]
        fired |= {s.redex.rule for s in trace.steps}
    # an invalid pair whose lowest valid gluing leaves the tail hanging
    w = StringOfColumns(((2,), (1, 2, 3)), (3,))
    assert find_redexes(FS, w) == [Redex("delta_alpha", 1)]
    assert normal_form(FS, w)[0] == StringOfColumns(((1, 2, 3), (2,)), (1,))
    fired.add("delta_alpha")
    assert fired == {r.name for r in FS.rules}


def test_intro_trace():
    trace = replay(FS, SKEW_INTRO, [("gamma", 2), ("gamma", 1), ("beta", 1), ("alpha", 2)])
    assert [str(d) for d in trace.diagrams()[1:]] == [
        "<[1,3][1,2][1,3][2];0,2,1>",
        "<[1,3][1,2][1,3][2];1,2,1>",
        "<[1,2,3][1][1,3][2];1,2,1>",
        "<[1,2,3][1,3][1][2];2,1,1>",
    ]
    assert render_ascii(trace.final) == "1112\n23\n3"


def test_rect():
    assert rect(SKEW_INTRO) == YOUNG_INTRO
    assert rect(YOUNG_INTRO) == YOUNG_INTRO
    assert rect(EMPTY) == EMPTY
    with pytest.raises(DiagramError):
        rect(StringOfColumns(((2,), (1,)), (1,)))


def test_rect_matches_row_insertion_on_diagonal_skews():
    words = list(words_up_to(3, 6))
    assert leftmost_is_schensted(words) == []
    assert rightmost_is_left_schensted(words) == []


def test_rect_on_general_skews_is_strategy_free():
    for w in skew_tableaux(3, 6):
        target = Y_ROW.constructor(reading_sw(w))
        for strategy, seed in (("leftmost", None), ("rightmost", None), ("random", 5)):
            assert rect(w, strategy, seed) == target


def test_classical_example_order():
    picks = iter([(1, 2), (2, 1), (1, 1)])
    history = []
    out = classical_rect(SKEW_INTRO, lambda corners: next(picks), history)
    assert [render_ascii(d) for d in history] == [" 112\n 23\n1\n3", " 112\n123\n3", "1112\n23\n3"]
    assert out == YOUNG_INTRO


def test_classical_helpers():
    from tabrw.diagrams import to_grid
    g = to_grid(SKEW_INTRO)
    assert inner_shape(g) == [2, 1, 0, 0]
    assert inner_corners(inner_shape(g)) == [(1, 2), (2, 1)]
    assert classical_rect(YOUNG_INTRO) == YOUNG_INTRO
    with pytest.raises(DiagramError):
        classical_rect(StringOfColumns(((1,), (1, 2)), (2,)))


def test_classical_oracle_on_every_corner_order():
    for w in skew_tableaux(3, 6, classical=True):
        assert all_classical_rects(w) == {rect(w)}


def test_column_involution():
    assert column_involution((1, 2), 3) == (3,)
    assert column_involution((1, 2, 3, 4), 4) == ()
    for c in columns_over(4):
        assert column_involution(column_involution(c, 4), 4) == c
        assert len(column_involution(c, 4)) == 4 - len(c)


def test_involution_maps_young_to_young():
    for t in young_tableaux(4, 6):
        s = diagram_involution(t, 4)
        assert not s or is_young(s)


def test_involution_reverses_products():
    one = lambda c: young_from_columns([c])
    star = lambda t, r: diagram_involution(t, 4, r)
    for c1, c2 in itertools.product(columns_over(4), repeat=2):
        lhs = star(Y_ROW.product(one(c1), one(c2)), 2)
        assert lhs == Y_ROW.product(star(one(c2), 1), star(one(c1), 1))


@given(st.lists(st.integers(1, 3), max_size=7).map(tuple))
def test_rect_reading_is_plactic_class_representative(u):
    from tabrw.congruence import congruent
    d = rect(embed(u, "s"))
    assert is_young(d) or not d
    if len(u) <= 6:
        assert congruent("plactic", 3, reading_sw(d), u)

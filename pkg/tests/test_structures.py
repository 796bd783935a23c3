import pytest
from hypothesis import given

from tabrw import diagrams as dg
from tabrw.diagrams import EMPTY, StringOfColumns, column, embed, reading_sw
from tabrw.structures import (
    DSK_COL, DSK_ROW, PAIRS, Q_LEFT, Q_ROW, SDS, Y_COL, Y_ROW, CarrierError, bottom_concat,
    carrier_elements, check_associativity, check_axioms, check_commutation, column_insert,
    get_sds, ribbon_from_rows, row_insert, rows_of, top_concat,
)
from tabrw.words import parse_word, weight, words_up_to

from conftest import words

CARRIER = {
    "dskrow": dg.is_diagonal_skew, "dskcol": dg.is_diagonal_skew,
    "yrow": dg.is_young, "ycol": dg.is_young,
    "qrow": dg.is_quasi_ribbon, "qleft": dg.is_quasi_ribbon,
}


def test_bumping_comparisons():
    assert row_insert((1, 2, 2), 2) == ((1, 2, 2, 2), None)
    assert row_insert((1, 2, 3), 2) == ((1, 2, 2), 3)
    assert column_insert((1, 2, 3), 2) == ((1, 2, 3), 2)


def test_young_examples():
    assert Y_ROW.one(EMPTY, 3) == column(3)
    assert Y_ROW.constructor(parse_word("3121312")) == StringOfColumns(
        ((1, 2, 3), (1, 3), (1,), (2,)), (2, 1, 1))
    assert Y_ROW.constructor(()) == EMPTY
    t = StringOfColumns(((1, 3), (2,)), (1,))
    assert Y_ROW.constructor(parse_word("312")) == t == Y_ROW.constructor(parse_word("132"))
    assert Y_ROW.product(column(3), column(1)) == column(1, 3)


def test_ribbon_example():
    q = Q_ROW.constructor(parse_word("5321432434"))
    assert q == StringOfColumns(((1, 2), (2, 3), (3,), (3, 4), (4,), (4, 5)), (3, 2, 2, 2, 2))
    assert reading_sw(q) == parse_word("2132343454")


def test_ribbon_gluing_needs_strict_corners():
    with pytest.raises(CarrierError):
        ribbon_from_rows([(1, 2), (2, 3)])
    assert rows_of(ribbon_from_rows([(1, 2), (3,)])) == [(1, 2), (3,)]


def test_diagonal_skew_structures():
    for u in words_up_to(3, 5):
        assert DSK_ROW.constructor(u) == embed(u, "s")
        assert DSK_COL.constructor(u) == embed(u, "s")
    assert top_concat(column(2), 1) == column(1, 2)
    assert bottom_concat(column(2), 3) == column(2, 3)


def test_product_unit():
    for S in SDS.values():
        d = S.constructor(parse_word("3121"))
        assert S.product(d, EMPTY) == d == S.product(EMPTY, d)


def test_get_sds():
    assert get_sds("Y_row") is Y_ROW and get_sds(Q_LEFT) is Q_LEFT
    with pytest.raises(KeyError):
        get_sds("nope")


def test_insert_checks_carrier():
    with pytest.raises(CarrierError):
        Y_ROW.insert(StringOfColumns(((2,), (1,)), (1,)), 1, check=True)


@pytest.mark.parametrize("name", sorted(SDS))
def test_axioms(name):
    assert check_axioms(SDS[name], 3, 5) == []


@pytest.mark.parametrize("name", sorted(SDS))
def test_carrier_closure_and_weight(name):
    S = SDS[name]
    for d, u in carrier_elements(S, 3, 5).items():
        assert not d or CARRIER[name](d)
        assert weight(reading_sw(d), 3) == weight(u, 3)


@pytest.mark.parametrize("right,left", PAIRS, ids=lambda s: s.name)
def test_commutation(right, left):
    assert check_commutation(right, left, 3, 5) == []


@pytest.mark.parametrize("name", sorted(SDS))
def test_associativity(name):
    assert check_associativity(SDS[name], 4, trials=200, seed=1) == []


@given(words(4, 6))
def test_round_trip_random_words(u):
    for S in SDS.values():
        d = S.constructor(u)
        assert S.constructor(reading_sw(d)) == d


def test_round_trip_exhaustive_over_four_letters():
    for S in (Y_ROW, Y_COL, Q_ROW, Q_LEFT):
        for d in carrier_elements(S, 4, 6):
            assert S.constructor(reading_sw(d)) == d

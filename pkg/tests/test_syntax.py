import pytest
from hypothesis import given, strategies as st

from closurelogic.sexp import SExpError, dump_formula, load_formula
from closurelogic.syntax import (BOT, Imp, ParseError, enumerate_formulas,
                                 formulas_upto, neg, parse, pretty, size, subterms)

from oracles import grow_trees, tree_of

TOP = Imp(BOT, BOT)


def formulas(max_leaves=9):
    return st.recursive(st.just(BOT), lambda sub: st.builds(Imp, sub, sub),
                        max_leaves=max_leaves)


@pytest.mark.parametrize("text, expected", [
    ("bot", BOT),
    ("bot -> bot -> bot", Imp(BOT, Imp(BOT, BOT))),
    ("~(bot -> bot)", Imp(TOP, BOT)),
    ("  ( bot )  ", BOT),
    ("~~bot", neg(neg(BOT))),
    ("~bot -> bot", Imp(neg(BOT), BOT)),
    ("(bot->bot)->bot", Imp(TOP, BOT)),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, pos", [
    ("", 0),
    ("bot bot", 4),
    ("(bot -> bot", 11),
    ("bot ->", 6),
    ("top", 0),
    ("bot )", 4),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


@pytest.mark.parametrize("f, text", [
    (BOT, "bot"),
    (Imp(BOT, Imp(BOT, BOT)), "bot -> bot -> bot"),
    (Imp(TOP, BOT), "(bot -> bot) -> bot"),
])
def test_pretty(f, text):
    assert pretty(f) == text


def test_neg_and_size():
    assert neg(BOT) == TOP
    assert neg(TOP) == Imp(TOP, BOT)
    assert [size(BOT), size(neg(BOT)), size(neg(neg(BOT)))] == [0, 1, 2]


def test_round_trip_and_no_self_negation_up_to_8():
    for f in formulas_upto(8):
        assert parse(pretty(f)) == f
        assert neg(f) != f
        assert size(neg(f)) == size(f) + 1


@given(formulas())
def test_round_trip_property(f):
    assert parse(pretty(f)) == f
    assert load_formula(dump_formula(f)) == f


@given(formulas())
def test_negation_is_never_a_fixed_point(f):
    assert neg(f) != f
    assert f in list(subterms(neg(f)))[1:]


def test_enumeration_examples():
    assert enumerate_formulas(0) == (BOT,)
    assert [pretty(f) for f in enumerate_formulas(2)] == \
        ["bot -> bot -> bot", "(bot -> bot) -> bot"]
    assert len(enumerate_formulas(6)) == 132


@pytest.mark.parametrize("n", range(9))
def test_enumeration_matches_leaf_expansion(n):
    ours = enumerate_formulas(n)
    assert len(set(ours)) == len(ours)
    assert {tree_of(f) for f in ours} == grow_trees(n)
    assert all(size(f) == n for f in ours)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_formulas(11)
    assert len(enumerate_formulas(3, cap=3)) == 5


def test_sexp_format_is_bit_exact():
    assert dump_formula(Imp(TOP, BOT)) == "(imp (imp bot bot) bot)"
    assert load_formula("  (imp  bot\n bot) ") == TOP
    for bad in ["(imp bot)", "(and bot bot)", "(imp bot bot) bot", "(imp bot bot"]:
        with pytest.raises(SExpError):
            load_formula(bad)

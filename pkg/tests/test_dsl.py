import random

import pytest

from termstrat import (
    NONDET,
    PARTIAL,
    TOTAL,
    TUF,
    FlavorError,
    ParseError,
    StrategyError,
    UnsupportedEffect,
    elaborate,
    load_rules,
    load_signature,
    parse_strategy,
    parse_term,
    print_strategy,
)
from termstrat.demo import path
from termstrat.dsl import ATOMS, BINARY, LISTS, PATH, UNARY, Expr

from conftest import oracle_paths, oracle_preorder


def read(name):
    with open(path(name), encoding="utf-8") as fh:
        return fh.read()


@pytest.fixture(scope="module")
def running():
    sig = load_signature(read("running.sig"))
    return sig, parse_term(read("term1.term"), sig), load_rules(read("running.rules"), sig)


@pytest.fixture(scope="module")
def exprs():
    sig = load_signature(read("exprs.sig"))
    return sig, parse_term(read("exprs.term"), sig), load_rules(read("exprs.rules"), sig)


def test_parse_examples():
    assert parse_strategy("once_td(rule return_int)") == Expr(
        "once_td", (Expr("rule", ("return_int",)),))
    e = parse_strategy("belowlist([rule p1, rule p2], rule f)")
    assert e == Expr("belowlist", ((Expr("rule", ("p1",)), Expr("rule", ("p2",))),
                                   Expr("rule", ("f",))))
    assert parse_strategy("  seq( id ,fail )") == Expr("seq", (Expr("id"), Expr("fail")))
    assert parse_strategy("adhoc(skip, a, b)") == Expr("adhoc", (Expr("skip"), "a", "b"))


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_strategy("full_td(")
    assert (info.value.line, info.value.col) == (1, 9)


@pytest.mark.parametrize("text", [
    "", "full_td", "full_td()", "seq(id)", "seq(id, id, id)", "nope(id)", "id id",
    "belowlist(rule p, id)", "full_tdpe(keep, keep)", "rule", "adhoc(id)", "choice(id,",
    "full_td(id))", "#",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_strategy(text)


def test_parse_error_on_later_line():
    with pytest.raises(ParseError) as info:
        parse_strategy("seq(id,\n   bogus(id))")
    assert (info.value.line, info.value.col) == (2, 4)


def random_expr(rng, depth=3):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice([Expr(rng.choice(ATOMS)), Expr("rule", (rng.choice("abc"),))])
    pick = rng.randrange(7)
    sub = lambda: random_expr(rng, depth - 1)
    if pick == 0:
        return Expr(rng.choice(UNARY), (sub(),))
    if pick == 1:
        return Expr(rng.choice(BINARY), (sub(), sub()))
    if pick == 2:
        return Expr(rng.choice(PATH), (sub(), sub()))
    if pick == 3:
        return Expr(rng.choice(LISTS), (tuple(sub() for _ in range(rng.randrange(3))), sub()))
    if pick == 4:
        return Expr("prepost", (sub(), (sub(),), ()))
    if pick == 5:
        lit = Expr("lit", (rng.choice([0, -3, True, False, None, 'a "q"\\']),))
        return Expr(rng.choice(["full_tdpe", "once_tdpe"]), (sub(), sub(), lit))
    return Expr("adhoc", (sub(), *rng.sample("xyz", rng.randrange(1, 3))))


def test_print_parse_round_trip():
    rng = random.Random(5)
    for _ in range(500):
        e = random_expr(rng)
        text = print_strategy(e)
        assert parse_strategy(text) == e
        assert print_strategy(parse_strategy(text)) == text


def test_elaborate_running_example(running):
    sig, t, rules = running
    s = elaborate("belowlist([rule p1, rule p2], rule sortb2int)", rules, "tu", PARTIAL)
    assert s(t) == (42,)
    s = elaborate("once_td(rule sortb2int)", rules, TUF("int_sum"), PARTIAL)
    assert s(t) == (7,)
    assert elaborate("full_td(rule sortb2int)", rules, "tu", PARTIAL)(t) == ()


def test_elaborate_errors(running, exprs):
    _, _, rules = running
    with pytest.raises(UnsupportedEffect):
        elaborate("choice(rule p1, rule p2)", rules, "tu", TOTAL)
    with pytest.raises(UnsupportedEffect):
        elaborate("once_td(rule sortb2int)", rules, "tu", TOTAL)
    with pytest.raises(FlavorError):
        elaborate("full_td(rule sortb2int)", rules, "tp", PARTIAL)
    with pytest.raises(FlavorError):
        elaborate("below(rule sortb2int, rule sortb2int)", rules, "tu", PARTIAL)
    with pytest.raises(FlavorError):
        elaborate("full_td(id)", rules, "tu", PARTIAL)
    with pytest.raises(StrategyError):
        elaborate("once_td(rule missing)", rules, "tu", PARTIAL)
    with pytest.raises(StrategyError):
        elaborate("full_td(rule b_env)", rules, "tu", PARTIAL)
    _, _, erules = exprs
    with pytest.raises(FlavorError):
        elaborate("full_td(rule negate_bool)", erules, "tu", PARTIAL)


def test_negate_booleans_against_oracle(exprs):
    sig, t, rules = exprs
    (out,) = elaborate("full_td(rule negate_bool)", rules, "tp", TOTAL)(t)

    def negate(u):
        if u.con is None:
            return not u.value if u.sort == "Bool" else u.value
        return (u.con, [negate(c) for c in u.children])

    from termstrat.term import from_raw
    assert out == from_raw(sig, negate(t))
    assert elaborate("full_td(adhoc(id, negate_bool))", rules, "tp", PARTIAL)(t) == (out,)
    assert elaborate("full_td(rule negate_bool)", rules, "tp", PARTIAL)(t) == ()


def test_total_rule_defaults_to_skip(exprs):
    sig, t, rules = exprs
    ints = [u.value for u in oracle_preorder(t) if u.sort == "Int"]
    s = elaborate("full_td(rule return_int)", rules, "tu", TOTAL, "list_concat")
    assert s(t) == (tuple(ints),)
    # under partial, a node of another sort makes the rule fail
    assert elaborate("full_td(rule return_int)", rules, "tu", PARTIAL, "list_concat")(t) == ()
    s = elaborate("full_td(adhoc(skip, return_int))", rules, "tu", PARTIAL, "list_concat")
    assert s(t) == (tuple(ints),)


def test_adhoc_groups_by_sort(exprs):
    sig, _, rules = exprs
    t = parse_term("(Add (Lit 1) (And true false))", sig)
    s = elaborate("full_td(adhoc(id, negate_bool, int_incr))", rules, "tp", PARTIAL)
    assert s(t) == (parse_term("(Add (Lit 2) (And false true))", sig),)


def test_seq_choice_pass(exprs):
    sig, _, rules = exprs
    lit = parse_term("(Lit 4)", sig)
    add = parse_term("(Add (Lit 1) (Lit 2))", sig)
    s = elaborate("choice(rule lit_value, skip)", rules, "tu", PARTIAL)
    assert s(lit) == (4,) and s(add) == (0,)
    s = elaborate("seq(rule swap_add, all(rule lit_value))", rules, "tu", PARTIAL)
    assert s(add) == (3,)
    s = elaborate("pass(rule lit_value, skip)", rules, "tu", PARTIAL)
    assert s(lit) == (0,) and s(add) == ()


def test_nondet_choice(exprs):
    sig, _, rules = exprs
    lit = parse_term("(Lit 4)", sig)
    s = elaborate("choice(rule lit_value, skip)", rules, "tu", NONDET)
    assert s(lit) == (4, 0)


def test_propagation(running):
    sig, t, rules = running
    s = elaborate("full_tdpe(adhoc(skip, b_env), inc, 0)", rules, "tu", PARTIAL, "list_concat")
    depths = tuple(len(p) for p, u in oracle_paths(t) if u.sort == "SortB")
    assert s(t) == (depths,)
    s = elaborate("full_tdpe(adhoc(skip, b_env), adhoc(keep, b_inc), 0)", rules, "tu",
                  PARTIAL, "list_concat")
    assert s(t) == ((0, 1, 2, 0, 1, 0, 1, 1, 2),)
    s = elaborate("once_tdpe(rule b_inc, keep, 10)", rules, "tu", PARTIAL)
    assert s(t) == (11,)
    with pytest.raises(StrategyError):
        elaborate("keep", rules, "tu", PARTIAL)


def test_schemes_match_library(exprs, terms):
    sig, t, rules = exprs
    s = elaborate("full_td(adhoc(skip, return_int))", rules, "tu", PARTIAL)
    assert s(t) == (sum(u.value for u in oracle_preorder(t) if u.sort == "Int"),)
    s = elaborate("stop_td(rule lit_value)", rules, "tu", PARTIAL, "list_concat")
    from termstrat import MonoUpdate, adhoc_tu, fail_tu
    lib = adhoc_tu(fail_tu(PARTIAL), MonoUpdate(
        "Expr", lambda u: ((u.children[0].value,),) if u.con == "Lit" else (), "tu"))
    from termstrat import stop_td
    assert s(t) == stop_td(TUF("list_concat"), lib)(t)

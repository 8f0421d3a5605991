import pytest

from termstrat import (
    PARTIAL,
    NONDET,
    TOTAL,
    ParseError,
    Prim,
    RuleError,
    SortViolation,
    adhoc_tp,
    fail_tp,
    id_tp,
    load_rules,
    parse_term,
    preorder,
)
from termstrat.rules import (
    NO_MATCH,
    PCon,
    PVar,
    PWild,
    compile_rule,
    compile_rules,
    instantiate,
    match,
    parse_pattern,
    parse_template,
    rule_function,
)
from termstrat.sexpr import read_one

RULES = """
(rule negate_bool Bool (lhs ?b) (rhs (neg ?b)) (kind transform))
(rule swap_add Expr (lhs (Add ?x ?y)) (rhs (Add ?y ?x)) (kind transform))
(rule lit_value Expr (lhs (Lit ?n)) (rhs ?n) (kind extract))
(rule is_one Expr (lhs (Lit 1)) (rhs true) (kind predicate))
(rule small Expr (lhs (Lit ?n)) (rhs (< ?n 10)) (kind predicate))
(rule bump_pos Expr (lhs (Lit ?n)) (rhs (Lit (+ ?n 1))) (guard (< 0 ?n)) (kind transform))
(rule neg_value Expr (lhs (Neg _)) (rhs -1) (kind extract))
(rule stmt_expr Stmt (lhs (While ?c _)) (rhs ?c) (kind extract))
"""


@pytest.fixture
def rules(sig):
    return load_rules(RULES, sig)


def pat(text, sort, sig):
    return parse_pattern(read_one(text), sort, sig)


def tmpl(text, sig, variables):
    return parse_template(read_one(text), sig, variables)


def test_match_examples(sig):
    t = parse_term("(Add (Lit 1) (Lit 2))", sig)
    b = match(pat("(Add ?x ?y)", "Expr", sig), t)
    assert b == {"x": parse_term("(Lit 1)", sig), "y": parse_term("(Lit 2)", sig)}
    assert match(pat("(Lit 1)", "Expr", sig), parse_term("(Lit 2)", sig)) is None
    assert match(pat("_", "Expr", sig), t) == {}
    assert match(pat("(Add _ (Lit ?n))", "Expr", sig), t) == {"n": Prim(2)}


def test_match_literal_types(sig):
    assert match(pat("(Flag true)", "Expr", sig), parse_term("(Flag true)", sig)) == {}
    assert match(pat("(Flag true)", "Expr", sig), parse_term("(Flag false)", sig)) is None


def test_instantiate_examples(sig):
    env = {"x": "Expr", "y": "Expr"}
    b = {"x": parse_term("(Lit 1)", sig), "y": parse_term("(Lit 2)", sig)}
    assert instantiate(tmpl("(Add ?y ?x)", sig, env), b) == parse_term("(Add (Lit 2) (Lit 1))", sig)
    assert instantiate(tmpl("(neg ?x)", sig, {"x": "Bool"}), {"x": Prim(True)}) == Prim(False)
    assert instantiate(tmpl("(+ ?x 1)", sig, {"x": "Int"}), {"x": Prim(41)}) == Prim(42)
    assert instantiate(tmpl("(- ?x 1)", sig, {"x": "Int"}), {"x": Prim(41)}) == Prim(40)
    assert instantiate(tmpl("(= ?x 1)", sig, {"x": "Int"}), {"x": Prim(1)}) == Prim(True)


def test_match_instantiate_round_trip(sig, terms):
    forms = ["(Add ?a ?b)", "(Neg ?a)", "(Lit ?n)", "(Add (Lit ?n) ?b)", "?whole",
             "(Seq ?s (Seq ?t ?u))", "(While ?c ?b)", "(Pair ?i ?j)"]
    seen = 0
    for text in forms:
        for sort in ("Expr", "Stmt"):
            try:
                p = pat(text, sort, sig)
            except RuleError:
                continue
            variables = {}
            from termstrat.rules import _pattern_vars
            _pattern_vars(p, variables)
            back = tmpl(text, sig, variables)
            for t in terms:
                for n in preorder(t):
                    if n.sort != sort:
                        continue
                    b = match(p, n)
                    if b is not None:
                        seen += 1
                        assert instantiate(back, b) == n
    assert seen > 500


def test_pattern_checks(sig):
    with pytest.raises(RuleError):
        pat("(Add ?x ?x)", "Expr", sig)  # non-linear
    with pytest.raises(RuleError):
        pat("(Add ?x)", "Expr", sig)
    with pytest.raises(RuleError):
        pat("(Assign ?x ?y)", "Expr", sig)
    with pytest.raises(RuleError):
        pat("(Lit true)", "Expr", sig)
    with pytest.raises(RuleError):
        pat("(Bogus ?x)", "Expr", sig)


def test_load_rules(rules):
    assert list(rules) == ["negate_bool", "swap_add", "lit_value", "is_one", "small",
                           "bump_pos", "neg_value", "stmt_expr"]
    r = rules["swap_add"]
    assert (r.sort, r.kind) == ("Expr", "transform")
    assert isinstance(r.lhs, PCon) and isinstance(r.lhs.args[0], PVar)
    assert isinstance(rules["neg_value"].lhs.args[0], PWild)


@pytest.mark.parametrize("text", [
    # transform changing the sort
    "(rule bad Expr (lhs (Lit ?n)) (rhs ?n) (kind transform))",
    "(rule bad Bool (lhs ?b) (rhs 1) (kind transform))",
    # unbound rhs variable
    "(rule bad Expr (lhs (Lit ?n)) (rhs (Lit ?m)) (kind transform))",
    # predicate must be Boolean
    "(rule bad Expr (lhs (Lit ?n)) (rhs ?n) (kind predicate))",
    # guard must be Boolean
    "(rule bad Expr (lhs (Lit ?n)) (rhs ?n) (guard ?n) (kind extract))",
    # ill-sorted template
    "(rule bad Expr (lhs (Lit ?n)) (rhs (Add ?n ?n)) (kind transform))",
    "(rule bad Expr (lhs (Lit ?n)) (rhs (+ ?n true)) (kind extract))",
    "(rule bad Nope (lhs _) (rhs 1) (kind extract))",
    "(rule bad Expr (lhs _) (rhs 1) (kind weird))",
    "(rule bad Expr (lhs _) (kind extract))",
    "(rule bad Expr (lhs _) (rhs 1) (rhs 2) (kind extract))",
])
def test_load_rejects(sig, text):
    with pytest.raises(RuleError):
        load_rules(text, sig)


@pytest.mark.parametrize("text", ["(rule bad Expr", "(foo)", "(rule 1 Expr (lhs _) (rhs 1) (kind extract))"])
def test_load_syntax_errors(sig, text):
    with pytest.raises(ParseError):
        load_rules(text, sig)


def test_duplicate_names(sig, rules):
    with pytest.raises(RuleError):
        load_rules("(rule small Expr (lhs _) (rhs 1) (kind extract))", sig, rules)


def test_compile_kinds(sig, rules):
    lit = lambda n: parse_term(f"(Lit {n})", sig)
    assert compile_rule(rules["negate_bool"], PARTIAL).fn(Prim(True)) == (Prim(False),)
    assert compile_rule(rules["negate_bool"], TOTAL).fn(Prim(True)) == (Prim(False),)
    assert compile_rule(rules["lit_value"], PARTIAL).fn(lit(42)) == (42,)
    one = compile_rule(rules["is_one"], PARTIAL)
    assert one.fn(lit(1)) == (None,) and one.fn(lit(2)) == ()
    small = compile_rule(rules["small"], NONDET)
    assert small.fn(lit(3)) == (None,) and small.fn(lit(30)) == ()
    assert compile_rule(rules["lit_value"], PARTIAL, inject=lambda v: (v,)).fn(lit(5)) == ((5,),)


def test_guard(sig, rules):
    f = compile_rule(rules["bump_pos"], PARTIAL).fn
    assert f(parse_term("(Lit 4)", sig)) == (parse_term("(Lit 5)", sig),)
    assert f(parse_term("(Lit -4)", sig)) == ()


def test_same_sort_non_match_fails(sig, rules):
    m = compile_rule(rules["swap_add"], PARTIAL)
    s = adhoc_tp(id_tp(PARTIAL), m)
    assert s(parse_term("(Neg (Nil))", sig)) == ()
    # a different sort reaches the default
    st = parse_term("(Noop unit)", sig)
    assert s(st) == (st,)


def test_first_match_wins(sig, rules):
    m = compile_rules([rules["lit_value"], rules["neg_value"]], PARTIAL)
    assert m.fn(parse_term("(Lit 3)", sig)) == (3,)
    assert m.fn(parse_term("(Neg (Nil))", sig)) == (-1,)
    assert m.fn(parse_term("(Nil)", sig)) == ()
    with pytest.raises(RuleError):
        compile_rules([rules["lit_value"], rules["stmt_expr"]], PARTIAL)
    with pytest.raises(RuleError):
        compile_rules([rules["lit_value"], rules["swap_add"]], PARTIAL)


def test_transform_outputs_stay_in_sort(sig, rules, terms):
    for name in ("swap_add", "bump_pos", "negate_bool"):
        fn = rule_function(rules[name])
        sort = rules[name].sort
        for t in terms[:300]:
            for n in preorder(t):
                if n.sort == sort:
                    try:
                        out = fn(n)
                    except RuleError:  # arithmetic left the Int range
                        continue
                    if out is not NO_MATCH:
                        assert out.sort == sort


def test_predicates_only_unit_or_failure(sig, rules, terms):
    for name in ("is_one", "small"):
        m = compile_rule(rules[name], NONDET)
        for t in terms[:300]:
            for n in preorder(t):
                if n.sort == "Expr":
                    assert m.fn(n) in ((), (None,))


def test_sort_violating_rule_is_caught_at_adhoc(sig, rules):
    # build an ill-behaved update by hand: Lit -> its Int child
    m = compile_rule(rules["lit_value"], PARTIAL)
    from termstrat import MonoUpdate
    bad = MonoUpdate("Expr", m.fn, "tp")
    s = adhoc_tp(fail_tp(PARTIAL), bad)
    t = parse_term("(Lit 7)", sig)
    with pytest.raises(SortViolation):
        s(t)
    assert t == parse_term("(Lit 7)", sig)


def test_env_variable(sig):
    rs = load_rules("(rule depth Expr (lhs _) (rhs (+ ?env 1)) (kind extract))", sig)
    assert rs["depth"].uses_env
    m = compile_rule(rs["depth"], PARTIAL, env=4)
    assert m.fn(parse_term("(Nil)", sig)) == (5,)


def test_overflow_is_a_rule_error(sig, rules):
    f = compile_rule(rules["bump_pos"], PARTIAL).fn
    with pytest.raises(RuleError):
        f(parse_term(f"(Lit {2**63 - 1})", sig))

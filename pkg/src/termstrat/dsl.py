"""Textual strategy language.

Grammar (whitespace between tokens is free)::

    expr   := 'id' | 'fail' | 'skip' | 'keep' | 'inc'
            | 'rule' NAME
            | 'adhoc' '(' expr (',' NAME)+ ')'
            | UNARY '(' expr ')'
            | BINARY '(' expr ',' expr ')'
            | PATH '(' expr ',' expr ')'
            | LIST '(' '[' [expr (',' expr)*] ']' ',' expr ')'
            | 'prepost' '(' expr ',' list ',' list ')'
            | PROP '(' expr ',' expr ',' LITERAL ')'
    UNARY  := all | one | full_td | full_bu | once_td | once_bu | stop_td | stop_bu
    BINARY := seq | choice | pass
    PATH   := beloweq | below | aboveeq | above
    LIST   := belowlist | abovelist
    PROP   := full_tdpe | once_tdpe
    LITERAL:= INT | true | false | unit | STRING

In ``PATH``/``LIST``/``prepost`` forms the predicates come first (for
``prepost``: processor, then the two predicate lists). ``PROP`` takes the
node strategy, the environment update and the initial environment; inside
it ``keep`` yields the current environment, ``inc`` the environment plus
one, and rules may mention ``?env``.
"""

import re
from dataclasses import dataclass

from . import schemes
from .core import adhoc, and_then, choice_s, const_tu, fail_tp, fail_tu, id_tp, seq_s
from .effects import MONOIDS
from .errors import FlavorError, ParseError, StrategyError
from .rules import compile_rules
from .sexpr import quote_string

UNARY = ("all", "one", "full_td", "full_bu", "once_td", "once_bu", "stop_td", "stop_bu")
BINARY = ("seq", "choice", "pass")
PATH = ("beloweq", "below", "aboveeq", "above")
LISTS = ("belowlist", "abovelist")
PROP = ("full_tdpe", "once_tdpe")
ATOMS = ("id", "fail", "skip", "keep", "inc")


@dataclass(frozen=True)
class Expr:
    """Strategy syntax tree node.

    ``args`` holds sub-expressions, names (``str``), tuples of
    sub-expressions for predicate lists, or a literal for ``lit``.
    """

    op: str
    args: tuple = ()

    def __str__(self):
        return print_strategy(self)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>-?[0-9]+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<str>"(?:[^"\\]|\\["\\])*")
      | (?P<punct>[()\[\],])
    )""",
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", *_linecol(text, pos))
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", None, n))
    return tokens


def _linecol(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.i]
        return ParseError(msg, *_linecol(self.text, tok[2]))

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] not in ("punct",):
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise self.error(f"expected {value!r}, found {what}", tok)

    def name(self):
        tok = self.next()
        if tok[0] != "name":
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise self.error(f"expected a name, found {what}", tok)
        return tok[1]

    def literal(self):
        tok = self.next()
        kind, value = tok[0], tok[1]
        if kind == "num":
            return Expr("lit", (int(value),))
        if kind == "str":
            body = value[1:-1]
            return Expr("lit", (re.sub(r'\\(["\\])', r"\1", body),))
        if kind == "name" and value in ("true", "false", "unit"):
            return Expr("lit", ({"true": True, "false": False, "unit": None}[value],))
        raise self.error("expected a literal environment value", tok)

    def expr_list(self):
        self.expect("[")
        items = []
        if self.peek()[1] != "]":
            items.append(self.expr())
            while self.peek()[1] == ",":
                self.next()
                items.append(self.expr())
        self.expect("]")
        return tuple(items)

    def expr(self):
        tok = self.peek()
        op = self.name()
        if op in ATOMS:
            return Expr(op)
        if op == "rule":
            return Expr("rule", (self.name(),))
        if op not in UNARY + BINARY + PATH + LISTS + PROP + ("adhoc", "prepost"):
            raise self.error(f"unknown strategy {op!r}", tok)
        self.expect("(")
        if op == "adhoc":
            base = self.expr()
            names = []
            self.expect(",")
            names.append(self.name())
            while self.peek()[1] == ",":
                self.next()
                names.append(self.name())
            args = (base, *names)
        elif op in UNARY:
            args = (self.expr(),)
        elif op in BINARY or op in PATH:
            a = self.expr()
            self.expect(",")
            args = (a, self.expr())
        elif op in LISTS:
            ps = self.expr_list()
            self.expect(",")
            args = (ps, self.expr())
        elif op == "prepost":
            f = self.expr()
            self.expect(",")
            pre = self.expr_list()
            self.expect(",")
            args = (f, pre, self.expr_list())
        else:
            f = self.expr()
            self.expect(",")
            u = self.expr()
            self.expect(",")
            args = (f, u, self.literal())
        self.expect(")")
        return Expr(op, args)


def parse_strategy(text):
    p = _Parser(text)
    e = p.expr()
    tok = p.peek()
    if tok[0] != "eof":
        raise p.error(f"unexpected trailing {tok[1]!r}", tok)
    return e


def _print_lit(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "unit"
    if isinstance(v, str):
        return quote_string(v)
    return str(v)


def print_strategy(e):
    op, args = e.op, e.args
    if op in ATOMS:
        return op
    if op == "rule":
        return f"rule {args[0]}"
    if op == "lit":
        return _print_lit(args[0])
    parts = []
    for a in args:
        if isinstance(a, Expr):
            parts.append(print_strategy(a))
        elif isinstance(a, tuple):
            parts.append("[" + ", ".join(print_strategy(x) for x in a) + "]")
        else:
            parts.append(a)
    return f"{op}({', '.join(parts)})"


# positions: what kind of strategy a sub-expression must elaborate to
TP_POS, TU_POS, PRED_POS, GUARD_POS, ENV_POS = "tp", "tu", "pred", "guard", "env"
_RULE_KINDS = {
    TP_POS: ("transform",),
    TU_POS: ("extract",),
    PRED_POS: ("predicate",),
    GUARD_POS: ("predicate", "extract"),
    ENV_POS: ("extract",),
}
_UNBOUND = object()


class _Context:
    __slots__ = ("rules", "effect", "monoid", "env", "cache")

    def __init__(self, rules, effect, monoid, env=_UNBOUND):
        self.rules = rules
        self.effect = effect
        self.monoid = monoid
        self.env = env
        self.cache = {}

    def with_env(self, env):
        return _Context(self.rules, self.effect, self.monoid, env)


def _flavor(pos, ctx):
    if pos == TP_POS:
        return schemes.TPF
    if pos == TU_POS:
        return schemes.TUF(ctx.monoid)
    return schemes.PREDICATE


def _rule_default(pos, ctx):
    # under total there is no failure, so updates fall back to skip
    if ctx.effect.has_zero:
        return fail_tp(ctx.effect) if pos == TP_POS else fail_tu(ctx.effect)
    return _skip(pos, ctx)


def _skip(pos, ctx):
    if pos == TP_POS:
        return id_tp(ctx.effect)
    if pos == TU_POS:
        return const_tu(ctx.monoid.empty, ctx.effect)
    if pos == ENV_POS:
        return const_tu(ctx.env, ctx.effect)
    return const_tu(None, ctx.effect, result="unit")


def _updates(names, pos, ctx):
    """Compile named rules into one update per sort, keeping first-seen order."""
    groups = {}
    for name in names:
        try:
            rule = ctx.rules[name]
        except KeyError:
            raise StrategyError(f"unknown rule {name!r}") from None
        if rule.kind not in _RULE_KINDS[pos]:
            raise FlavorError(
                f"rule {name} is a {rule.kind} rule; this position needs "
                + " or ".join(_RULE_KINDS[pos])
            )
        if rule.uses_env and ctx.env is _UNBOUND:
            raise StrategyError(f"rule {name} uses ?env outside full_tdpe/once_tdpe")
        groups.setdefault((rule.sort, rule.kind), []).append(rule)
    inject = ctx.monoid.inject if pos == TU_POS else None
    env = None if ctx.env is _UNBOUND else ctx.env
    out = []
    for (_, kind), rules in groups.items():
        out.append(compile_rules(rules, ctx.effect, env, inject if kind == "extract" else None))
    return out


def _elab(e, pos, ctx):
    op, args = e.op, e.args
    eff = ctx.effect
    if op == "id":
        if pos != TP_POS:
            raise FlavorError("id is type-preserving; use skip in a type-unifying position")
        return id_tp(eff)
    if op == "skip":
        return _skip(pos, ctx)
    if op == "fail":
        eff.require_zero("fail")
        return fail_tp(eff) if pos == TP_POS else fail_tu(eff)
    if op in ("keep", "inc"):
        if ctx.env is _UNBOUND:
            raise StrategyError(f"{op} is only meaningful inside full_tdpe/once_tdpe")
        if pos == TP_POS:
            raise FlavorError(f"{op} yields a value, not a term")
        value = ctx.env if op == "keep" else ctx.env + 1
        if pos == TU_POS:
            value = ctx.monoid.inject(value)
        return const_tu(value, eff)
    if op == "rule":
        s = _rule_default(pos, ctx)
        for m in _updates(args, pos, ctx):
            s = adhoc(s, m)
        return s
    if op == "adhoc":
        s = _elab(args[0], pos, ctx)
        for m in _updates(args[1:], pos, ctx):
            s = adhoc(s, m)
        return s
    if op == "seq":
        return seq_s(_elab(args[0], TP_POS, ctx), _elab(args[1], pos, ctx))
    if op == "pass":
        return and_then(_elab(args[0], GUARD_POS, ctx), _elab(args[1], pos, ctx))
    if op == "choice":
        eff.require_zero("choice")
        return choice_s(_elab(args[0], pos, ctx), _elab(args[1], pos, ctx))
    flavor = _flavor(pos, ctx)
    if op == "all":
        return schemes.all_(flavor, _elab(args[0], pos, ctx))
    if op == "one":
        eff.require_zero("one")
        return schemes.one(flavor, _elab(args[0], pos, ctx))
    if op in UNARY:
        kind, direction = op.split("_")
        return getattr(schemes, kind)(direction, flavor, _elab(args[0], pos, ctx))
    if op in PATH:
        eff.require_zero(op)
        return getattr(schemes, op)(flavor, _elab(args[0], PRED_POS, ctx), _elab(args[1], pos, ctx))
    if op in LISTS:
        eff.require_zero(op)
        ps = [_elab(p, PRED_POS, ctx) for p in args[0]]
        return getattr(schemes, op)(flavor, ps, _elab(args[1], pos, ctx))
    if op == "prepost":
        eff.require_zero(op)
        f = _elab(args[0], pos, ctx)
        pre = [_elab(p, PRED_POS, ctx) for p in args[1]]
        post = [_elab(p, PRED_POS, ctx) for p in args[2]]
        return schemes.prepost(flavor, f, pre, post)
    if op in PROP:
        return _elab_propagate(op, args, pos, ctx, flavor)
    raise StrategyError(f"cannot elaborate {op!r}")


def _elab_propagate(op, args, pos, ctx, flavor):
    fexpr, uexpr, init = args
    if op == "once_tdpe":
        ctx.effect.require_zero(op)
    if init.op != "lit":
        raise StrategyError(f"{op} needs a literal initial environment")
    # check both bodies once up front so errors surface before running
    _elab(fexpr, pos, ctx.with_env(init.args[0]))
    _elab(uexpr, ENV_POS, ctx.with_env(init.args[0]))

    def at_env(expr, p):
        cache = {}

        def get(e):
            try:
                key = (type(e), e)
                hash(key)
            except TypeError:
                return _elab(expr, p, ctx.with_env(e))
            s = cache.get(key)
            if s is None:
                s = cache[key] = _elab(expr, p, ctx.with_env(e))
            return s

        return get

    f = at_env(fexpr, pos)
    u = at_env(uexpr, ENV_POS)
    scheme = schemes.full_tdpe if op == "full_tdpe" else schemes.once_tdpe
    return scheme(flavor, f, lambda e, t: u(e).fn(t), init.args[0])


def elaborate(e, rules, flavor="tp", effect=None, monoid=None):
    """Turn a parsed expression into a runnable strategy.

    ``flavor`` is ``"tp"`` or ``"tu"`` (or a ``Flavor``); ``monoid`` names the
    combination monoid for TU runs.
    """
    from .effects import PARTIAL

    effect = effect or PARTIAL
    if isinstance(e, str):
        e = parse_strategy(e)
    if isinstance(flavor, schemes.Flavor):
        monoid = flavor.monoid
        flavor = flavor.kind
    if flavor not in (TP_POS, TU_POS):
        raise ValueError(f"flavor must be 'tp' or 'tu', not {flavor!r}")
    if isinstance(monoid, str):
        monoid = MONOIDS[monoid]
    if monoid is None:
        monoid = MONOIDS["int_sum"]
    return _elab(e, flavor, _Context(rules, effect, monoid))

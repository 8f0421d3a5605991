"""Pattern/template rewrite rules compiled into sort-specific updates.

Rules file syntax::

    (rule NAME SORT (lhs PATTERN) (rhs TEMPLATE) [(guard EXPR)] (kind KIND))

    PATTERN  := '?'NAME | '_' | literal | CON | '(' CON PATTERN* ')'
    TEMPLATE := '?'NAME | literal | CON | '(' CON TEMPLATE* ')'
              | '(' OP TEMPLATE+ ')'          OP in neg + - = <
    KIND     := transform | extract | predicate

``?env`` is reserved: inside templates it denotes the environment threaded
by the propagating traversals.
"""

from dataclasses import dataclass, field
from typing import Optional

from ._pykernels import INT_MAX, INT_MIN
from .core import MonoUpdate
from .errors import ParseError, RuleError, TermStratError
from .sexpr import Atom, SList, read_all
from .signature import BOOL, INT, STR, UNIT, is_identifier
from .term import App, Prim, Term

KINDS = ("transform", "extract", "predicate")
ENV_VAR = "env"
ANY = "?"  # sort of ?env, known only at run time

_LITERAL_SORT = {bool: BOOL, int: INT, str: STR, type(None): UNIT}


@dataclass(frozen=True)
class PVar:
    name: str
    sort: str


@dataclass(frozen=True)
class PWild:
    sort: str


@dataclass(frozen=True)
class PLit:
    value: object
    sort: str


@dataclass(frozen=True)
class PCon:
    decl: object
    args: tuple

    @property
    def sort(self):
        return self.decl.result


@dataclass(frozen=True)
class TVar:
    name: str
    sort: str


@dataclass(frozen=True)
class TLit:
    value: object
    sort: str


@dataclass(frozen=True)
class TCon:
    decl: object
    args: tuple

    @property
    def sort(self):
        return self.decl.result


@dataclass(frozen=True)
class TOp:
    op: str
    args: tuple
    sort: str


@dataclass(frozen=True)
class RuleDef:
    name: str
    sort: str
    lhs: object
    rhs: object
    kind: str
    guard: Optional[object] = None
    uses_env: bool = field(default=False, compare=False)

    @property
    def flavor(self):
        return "tp" if self.kind == "transform" else "tu"


def _literal(atom):
    if atom.kind in ("int", "str"):
        return True, atom.value
    if atom.value == "true":
        return True, True
    if atom.value == "false":
        return True, False
    if atom.value == "unit":
        return True, None
    return False, None


def _lit_sort(value):
    return _LITERAL_SORT[type(value)]


def _var_name(atom):
    if atom.kind == "sym" and atom.value.startswith("?"):
        name = atom.value[1:]
        if not is_identifier(name):
            raise ParseError(f"bad variable name {atom.value!r}", atom.line, atom.col)
        return name
    return None


def parse_pattern(form, sort, sig, rule=None, seen=None):
    """Parse ``form`` as a pattern for terms of ``sort``."""
    seen = set() if seen is None else seen
    if isinstance(form, Atom):
        if form.is_sym("_"):
            return PWild(sort)
        name = _var_name(form)
        if name is not None:
            if name == ENV_VAR:
                raise RuleError("?env cannot be bound by a pattern", rule)
            if name in seen:
                raise RuleError(f"variable ?{name} occurs twice in the pattern", rule)
            seen.add(name)
            return PVar(name, sort)
        is_lit, value = _literal(form)
        if is_lit:
            if _lit_sort(value) != sort:
                raise RuleError(
                    f"literal {form.value!r} has sort {_lit_sort(value)}, expected {sort}", rule
                )
            return PLit(value, sort)
        form = SList([form], form.line, form.col)
    if not form or not isinstance(form[0], Atom) or form[0].kind != "sym":
        raise ParseError("expected a constructor pattern", form.line, form.col)
    decl = _lookup(sig, form[0].value, rule)
    if decl.result != sort:
        raise RuleError(f"constructor {decl.name} builds {decl.result}, expected {sort}", rule)
    if len(form) - 1 != decl.arity:
        raise RuleError(
            f"constructor {decl.name} takes {decl.arity} arguments, pattern has {len(form) - 1}",
            rule,
        )
    args = tuple(parse_pattern(f, s, sig, rule, seen) for f, s in zip(form[1:], decl.args))
    return PCon(decl, args)


def _lookup(sig, name, rule):
    try:
        return sig.lookup(name)
    except TermStratError:
        raise RuleError(f"unknown constructor {name}", rule) from None


_OPS = {"neg": 1, "+": 2, "-": 2, "=": 2, "<": 2}


def parse_template(form, sig, variables, rule=None):
    """Parse and sort-check a template; ``variables`` maps names to sorts."""
    if isinstance(form, Atom):
        name = _var_name(form)
        if name is not None:
            if name == ENV_VAR:
                return TVar(name, ANY)
            if name not in variables:
                raise RuleError(f"unbound variable ?{name}", rule)
            return TVar(name, variables[name])
        is_lit, value = _literal(form)
        if is_lit:
            return TLit(value, _lit_sort(value))
        form = SList([form], form.line, form.col)
    if not form or not isinstance(form[0], Atom) or form[0].kind != "sym":
        raise ParseError("expected a constructor or operator template", form.line, form.col)
    head = form[0].value
    args = tuple(parse_template(f, sig, variables, rule) for f in form[1:])
    if head in _OPS:
        if len(args) != _OPS[head]:
            raise RuleError(f"operator {head} takes {_OPS[head]} arguments", rule)
        return TOp(head, args, _op_sort(head, args, rule))
    decl = _lookup(sig, head, rule)
    if len(args) != decl.arity:
        raise RuleError(f"constructor {decl.name} takes {decl.arity} arguments", rule)
    for a, s in zip(args, decl.args):
        if a.sort != s and a.sort != ANY:
            raise RuleError(f"argument of {decl.name} has sort {a.sort}, expected {s}", rule)
    return TCon(decl, args)


def _op_sort(op, args, rule):
    sorts = [a.sort for a in args]

    def need(expected):
        for s in sorts:
            if s != expected and s != ANY:
                raise RuleError(f"operator {op} expects {expected} operands, got {s}", rule)

    if op == "neg":
        s = sorts[0]
        if s not in (INT, BOOL, ANY):
            raise RuleError(f"neg expects Int or Bool, got {s}", rule)
        return s
    if op in ("+", "-"):
        need(INT)
        return INT
    if op == "<":
        need(INT)
        return BOOL
    a, b = sorts
    if a != b and ANY not in (a, b):
        raise RuleError(f"= compares {a} with {b}", rule)
    return BOOL


def _template_vars(tmpl, out):
    if isinstance(tmpl, TVar):
        out.add(tmpl.name)
    elif isinstance(tmpl, (TCon, TOp)):
        for a in tmpl.args:
            _template_vars(a, out)
    return out


def _pattern_vars(pat, out):
    if isinstance(pat, PVar):
        out[pat.name] = pat.sort
    elif isinstance(pat, PCon):
        for a in pat.args:
            _pattern_vars(a, out)
    return out


def make_rule(sig, name, sort, lhs_form, rhs_form, kind, guard_form=None):
    if kind not in KINDS:
        raise RuleError(f"unknown kind {kind!r}", name)
    if not sig.has_sort(sort):
        raise RuleError(f"undeclared sort {sort}", name)
    lhs = parse_pattern(lhs_form, sort, sig, name)
    variables = _pattern_vars(lhs, {})
    rhs = parse_template(rhs_form, sig, variables, name)
    guard = None
    if guard_form is not None:
        guard = parse_template(guard_form, sig, variables, name)
        if guard.sort not in (BOOL, ANY):
            raise RuleError(f"guard has sort {guard.sort}, expected Bool", name)
    if kind == "transform" and rhs.sort != sort:
        raise RuleError(f"transform rewrites {sort} into {rhs.sort}", name)
    if kind == "predicate" and rhs.sort not in (BOOL, ANY):
        raise RuleError(f"predicate condition has sort {rhs.sort}, expected Bool", name)
    used = _template_vars(rhs, set())
    if guard is not None:
        _template_vars(guard, used)
    return RuleDef(name, sort, lhs, rhs, kind, guard, uses_env=ENV_VAR in used)


def load_rules(text, sig, base=None):
    """Parse a rules file; returns a dict of rules by name in file order.

    ``base`` holds rules already loaded; names must stay unique across it.
    """
    rules = dict(base or {})
    for form in read_all(text):
        if not (isinstance(form, SList) and form and isinstance(form[0], Atom)
                and form[0].is_sym("rule")):
            raise ParseError("expected (rule ...)", form.line, form.col)
        if len(form) < 5 or not isinstance(form[1], Atom) or not form[1].is_sym() \
                or not isinstance(form[2], Atom) or not form[2].is_sym():
            raise ParseError("expected (rule NAME SORT ...)", form.line, form.col)
        name, sort = form[1].value, form[2].value
        if name in rules:
            raise RuleError("duplicate rule name", name)
        sections = {}
        for sec in form[3:]:
            if not isinstance(sec, SList) or len(sec) != 2 or not isinstance(sec[0], Atom) \
                    or sec[0].value not in ("lhs", "rhs", "guard", "kind"):
                raise ParseError("expected (lhs ...), (rhs ...), (guard ...) or (kind ...)",
                                 sec.line, sec.col)
            key = sec[0].value
            if key in sections:
                raise RuleError(f"repeated ({key} ...) section", name)
            sections[key] = sec[1]
        for key in ("lhs", "rhs", "kind"):
            if key not in sections:
                raise RuleError(f"missing ({key} ...) section", name)
        kind = sections["kind"]
        if not isinstance(kind, Atom) or kind.value not in KINDS:
            raise RuleError("kind must be transform, extract or predicate", name)
        rules[name] = make_rule(
            sig, name, sort, sections["lhs"], sections["rhs"], kind.value, sections.get("guard")
        )
    return rules


def match(pattern, t):
    """Bindings of the pattern variables, or None when ``t`` does not match."""
    bindings = {}
    stack = [(pattern, t)]
    while stack:
        p, s = stack.pop()
        if s.sort != p.sort:
            return None
        if isinstance(p, PVar):
            bindings[p.name] = s
        elif isinstance(p, PLit):
            if s.con is not None or type(s.value) is not type(p.value) or s.value != p.value:
                return None
        elif isinstance(p, PCon):
            if s.con != p.decl.name:
                return None
            stack.extend(zip(p.args, s.children))
    return bindings


def _as_term(v):
    return v if isinstance(v, Term) else Prim(v)


def instantiate(tmpl, bindings, env=None):
    """Evaluate a template to a Term; primitive results come back as ``Prim``."""
    if isinstance(tmpl, TVar):
        if tmpl.name == ENV_VAR:
            return _as_term(env)
        try:
            return bindings[tmpl.name]
        except KeyError:
            raise RuleError(f"unbound variable ?{tmpl.name}") from None
    if isinstance(tmpl, TLit):
        return Prim(tmpl.value)
    if isinstance(tmpl, TCon):
        return App(tmpl.decl, [instantiate(a, bindings, env) for a in tmpl.args])
    vals = [instantiate(a, bindings, env) for a in tmpl.args]
    op = tmpl.op
    if op == "=":
        return Prim(vals[0] == vals[1])
    xs = [v.value for v in vals]
    if op == "neg":
        x = xs[0]
        if type(x) is bool:
            return Prim(not x)
        if type(x) is int:
            if x == INT_MIN:
                raise RuleError(f"integer overflow in neg {x}")
            return Prim(-x)
        raise RuleError(f"neg applied to {vals[0]}")
    for v in xs:
        if type(v) is not int:
            raise RuleError(f"operator {op} applied to non-integer {v!r}")
    if op == "<":
        return Prim(xs[0] < xs[1])
    r = xs[0] + xs[1] if op == "+" else xs[0] - xs[1]
    if not INT_MIN <= r <= INT_MAX:
        raise RuleError(f"integer overflow in {xs[0]} {op} {xs[1]}")
    return Prim(r)


NO_MATCH = object()


def rule_function(rule, env=None):
    """``t -> result | NO_MATCH`` for one rule.

    Results: a Term (transform), a Python value or Term (extract), or
    ``None`` for a satisfied predicate.
    """
    lhs, rhs, guard, kind = rule.lhs, rule.rhs, rule.guard, rule.kind

    def apply(t):
        b = match(lhs, t)
        if b is None:
            return NO_MATCH
        if guard is not None and instantiate(guard, b, env).value is not True:
            return NO_MATCH
        out = instantiate(rhs, b, env)
        if kind == "transform":
            return out
        if kind == "predicate":
            return None if out.value is True else NO_MATCH
        return out.value if out.con is None else out

    return apply


def compile_rules(rules, effect, env=None, inject=None):
    """One update for several rules on a single sort; the first match wins.

    A term of the right sort that no rule matches fails (``effect.zero``).
    ``inject`` lifts extracted values, e.g. into a singleton list.
    """
    rules = list(rules)
    if not rules:
        raise RuleError("no rules to compile")
    sort, flavor = rules[0].sort, rules[0].flavor
    for r in rules[1:]:
        if r.sort != sort or r.flavor != flavor:
            raise RuleError("rules compiled together must share sort and flavor", r.name)
    fns = [rule_function(r, env) for r in rules]
    zero = effect.zero

    def run(t):
        for f in fns:
            out = f(t)
            if out is not NO_MATCH:
                return ((inject(out) if inject is not None else out),)
        return zero()

    return MonoUpdate(sort, run, flavor)


def compile_rule(rule, effect, env=None, inject=None):
    return compile_rules([rule], effect, env, inject)

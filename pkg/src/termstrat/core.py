"""First-class strategies and their basic combinators.

A strategy wraps a function from a term to an effectful result (a tuple,
see ``effects``). ``TP`` strategies are type-preserving: every result is a
term of the input's sort. ``TU`` strategies are type-unifying: every result
is a value of one fixed type regardless of the input's sort.

Combinators call ``.fn`` directly; ``__call__`` is the checked public
entry point.
"""

from dataclasses import dataclass
from typing import Callable

from .errors import EffectMismatch, SortViolation


class Strategy:
    __slots__ = ("fn", "effect")

    def __init__(self, fn, effect):
        self.fn = fn
        self.effect = effect

    def __call__(self, t):
        return self.fn(t)

    def with_fn(self, fn):
        """A strategy of the same flavor and effect with a different body."""
        return type(self)(fn, self.effect)

    def __repr__(self):
        return f"<{type(self).__name__} {self.effect.name}>"


class TP(Strategy):
    __slots__ = ()

    def __call__(self, t):
        results = self.fn(t)
        sort = t.sort
        for r in results:
            if r.sort != sort:
                raise SortViolation(sort, r.sort)
        return results


class TU(Strategy):
    __slots__ = ("result",)

    def __init__(self, fn, effect, result="value"):
        super().__init__(fn, effect)
        # descriptor of the result type: "term", "prim", "unit", "list" or "value"
        self.result = result

    def with_fn(self, fn):
        return TU(fn, self.effect, self.result)


def same_effect(*strategies):
    effect = strategies[0].effect
    for s in strategies[1:]:
        if s.effect is not effect:
            raise EffectMismatch(
                f"cannot combine {effect.name} and {s.effect.name} strategies"
            )
    return effect


def _pure(t):
    return (t,)


def id_tp(effect):
    return TP(_pure, effect)


def const_tu(a, effect, result="value"):
    out = (a,)
    return TU(lambda t: out, effect, result)


def fail_tp(effect):
    effect.require_zero("fail")
    return TP(lambda t: (), effect)


def fail_tu(effect, result="value"):
    effect.require_zero("fail")
    return TU(lambda t: (), effect, result)


def fail_s(effect, flavor=TP):
    return fail_tp(effect) if flavor is TP else fail_tu(effect)


def seq_s(first, second):
    """Run ``first``, then ``second`` on the term it produced."""
    if not isinstance(first, TP):
        raise TypeError("seq needs a type-preserving first strategy")
    effect = same_effect(first, second)
    f, g = first.fn, second.fn
    bind = effect.bind
    return second.with_fn(lambda t: bind(f(t), g))


def pass_s(first, second, result_type=None):
    """Run ``first`` and hand its value to ``second``; both see the same term.

    ``second`` maps the value to a strategy. ``result_type`` (TP or TU,
    default TU) fixes the flavor of the combined strategy.
    """
    if not isinstance(first, TU):
        raise TypeError("pass needs a type-unifying first strategy")
    effect = first.effect
    f = first.fn
    bind = effect.bind

    def run(t):
        def cont(a):
            nxt = second(a)
            if nxt.effect is not effect:
                raise EffectMismatch("pass continuation changed the effect kind")
            return nxt.fn(t)

        return bind(f(t), cont)

    if result_type is TP:
        return TP(run, effect)
    return TU(run, effect)


def and_then(guard, s):
    """``s`` applied where ``guard`` succeeds; the guard's value is discarded."""
    same_effect(guard, s)
    g, f = guard.fn, s.fn
    bind = guard.effect.bind
    return s.with_fn(lambda t: bind(g(t), lambda _: f(t)))


def choice_s(left, right):
    effect = same_effect(left, right)
    effect.require_zero("choice")
    if type(left) is not type(right):
        raise TypeError("choice needs two strategies of the same flavor")
    lf, rf = left.fn, right.fn
    plus = effect.plus_lazy
    return left.with_fn(lambda t: plus(lf(t), lambda: rf(t)))


@dataclass(frozen=True)
class MonoUpdate:
    """A sort-specific function used to override a generic strategy.

    ``fn`` is only ever called on terms whose sort equals ``tag``.
    """

    tag: str
    fn: Callable
    flavor: str = "tp"


def adhoc_tp(poly, mono):
    """``mono.fn(v)`` when ``v`` has sort ``mono.tag``, ``poly(v)`` otherwise.

    Results of ``mono.fn`` are checked to keep the tag's sort.
    """
    if not isinstance(poly, TP):
        raise TypeError("adhoc_tp needs a TP default")
    if mono.flavor != "tp":
        raise TypeError("adhoc_tp needs a TP update")
    tag, m, p = mono.tag, mono.fn, poly.fn

    def run(t):
        if t.sort == tag:
            results = m(t)
            for r in results:
                got = getattr(r, "sort", None)
                if got != tag:
                    raise SortViolation(tag, got or type(r).__name__)
            return results
        return p(t)

    return TP(run, poly.effect)


def adhoc_tu(poly, mono):
    if not isinstance(poly, TU):
        raise TypeError("adhoc_tu needs a TU default")
    if mono.flavor != "tu":
        raise TypeError("adhoc_tu needs a TU update")
    tag, m, p = mono.tag, mono.fn, poly.fn
    return poly.with_fn(lambda t: m(t) if t.sort == tag else p(t))


def adhoc(poly, mono):
    return adhoc_tp(poly, mono) if isinstance(poly, TP) else adhoc_tu(poly, mono)

"""Effect disciplines for strategy results, and the monoids used by TU combination.

An effectful result is a tuple of values:

* ``TOTAL``   always exactly one value (identity monad);
* ``PARTIAL`` zero or one value (failure is ``()``);
* ``NONDET``  any number of values, in order.

Sharing one representation keeps ``pure`` identical across kinds; only
``bind``, ``zero`` and ``plus`` differ.
"""

from dataclasses import dataclass
from itertools import chain
from typing import Any, Callable

from .errors import UnsupportedEffect

NOTHING = ()


class Effect:
    __slots__ = ("name", "has_zero")

    def __init__(self, name, has_zero):
        self.name = name
        self.has_zero = has_zero

    def __repr__(self):
        return self.name.upper()

    def __reduce__(self):
        return (by_name, (self.name,))

    @staticmethod
    def pure(a):
        return (a,)

    def bind(self, m, k):
        raise NotImplementedError

    def zero(self):
        if not self.has_zero:
            raise UnsupportedEffect(f"the {self.name} effect has no failure")
        return NOTHING

    def plus(self, left, right):
        return self.plus_lazy(left, lambda: right)

    def plus_lazy(self, left, right_thunk):
        """``plus`` whose right operand is only computed when it can matter."""
        raise UnsupportedEffect(f"the {self.name} effect has no choice")

    def require_zero(self, what):
        if not self.has_zero:
            raise UnsupportedEffect(f"{what} needs a partial or nondet effect, not {self.name}")


class _Total(Effect):
    __slots__ = ()

    def bind(self, m, k):
        return k(m[0])


class _Partial(Effect):
    __slots__ = ()

    def bind(self, m, k):
        return k(m[0]) if m else NOTHING

    def plus_lazy(self, left, right_thunk):
        return left if left else right_thunk()


class _Nondet(Effect):
    __slots__ = ()

    def bind(self, m, k):
        if len(m) == 1:
            return k(m[0])
        return tuple(chain.from_iterable(k(a) for a in m))

    def plus_lazy(self, left, right_thunk):
        return left + right_thunk()


TOTAL = _Total("total", False)
PARTIAL = _Partial("partial", True)
NONDET = _Nondet("nondet", True)

EFFECTS = {e.name: e for e in (TOTAL, PARTIAL, NONDET)}


def by_name(name):
    try:
        return EFFECTS[name]
    except KeyError:
        raise ValueError(f"unknown effect {name!r}; expected one of {sorted(EFFECTS)}") from None


def eff_pure(a):
    return (a,)


def eff_bind(effect, m, k):
    return effect.bind(m, k)


def eff_zero(effect):
    return effect.zero()


def eff_plus(effect, left, right):
    return effect.plus(left, right)


@dataclass(frozen=True)
class Monoid:
    name: str
    empty: Any
    combine: Callable[[Any, Any], Any]
    # lifts a single extracted value into the monoid's carrier
    inject: Callable[[Any], Any] = None

    def __post_init__(self):
        if self.inject is None:
            object.__setattr__(self, "inject", _identity)

    def concat(self, values):
        acc = self.empty
        for v in values:
            acc = self.combine(acc, v)
        return acc


def _identity(v):
    return v


def _unit_combine(a, b):
    return None


def _int_sum(a, b):
    return a + b


def _list_concat(a, b):
    return tuple(a) + tuple(b)


def _str_concat(a, b):
    return a + b


MONOIDS = {
    "unit": Monoid("unit", None, _unit_combine, lambda v: None),
    "int_sum": Monoid("int_sum", 0, _int_sum),
    "list_concat": Monoid("list_concat", (), _list_concat, lambda v: (v,)),
    "str_concat": Monoid("str_concat", "", _str_concat),
}


def monoid_registry(name):
    try:
        return MONOIDS[name]
    except KeyError:
        raise ValueError(f"unknown monoid {name!r}; expected one of {sorted(MONOIDS)}") from None

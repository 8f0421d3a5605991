"""Recursive traversal schemes built from the one-layer combinators.

Every scheme takes a ``Flavor`` first: ``TPF`` for type-preserving
traversal, ``TUF(monoid)`` for type-unifying traversal whose partial
results are combined with ``monoid``.
"""

from dataclasses import dataclass
from typing import Optional

from .core import TP, TU, and_then, choice_s, const_tu, id_tp, same_effect, seq_s
from .effects import MONOIDS, Monoid
from .onelayer import all_tp, all_tu, one_tp, one_tu


@dataclass(frozen=True)
class Flavor:
    kind: str
    monoid: Optional[Monoid] = None

    @property
    def strategy_type(self):
        return TP if self.kind == "tp" else TU

    def check(self, s):
        if not isinstance(s, self.strategy_type):
            raise TypeError(f"expected a {self.kind.upper()} strategy, got {type(s).__name__}")
        return s

    def __repr__(self):
        return "TPF" if self.kind == "tp" else f"TUF({self.monoid.name})"


TPF = Flavor("tp")


def TUF(monoid):
    if isinstance(monoid, str):
        monoid = MONOIDS[monoid]
    return Flavor("tu", monoid)


# predicates are unit-valued TU strategies
PREDICATE = TUF("unit")


def comb(flavor, l, r):
    """Sequence (TP) or run both on the same term and combine results (TU)."""
    if flavor.kind == "tp":
        return seq_s(flavor.check(l), flavor.check(r))
    effect = same_effect(flavor.check(l), flavor.check(r))
    bind = effect.bind
    combine = flavor.monoid.combine
    lf, rf = l.fn, r.fn

    def run(t):
        return bind(lf(t), lambda a: bind(rf(t), lambda b: (combine(a, b),)))

    return l.with_fn(run)


def skip(flavor, effect):
    if flavor.kind == "tp":
        return id_tp(effect)
    return const_tu(flavor.monoid.empty, effect)


def all_(flavor, s):
    if flavor.kind == "tp":
        return all_tp(flavor.check(s))
    return all_tu(flavor.monoid, flavor.check(s))


def one(flavor, s):
    if isinstance(s, TP):
        return one_tp(s)
    return one_tu(s)


def traverse(op, descend, f):
    """The strategy ``s`` with ``s = op(f, descend(s))``.

    ``op`` composes node processing with descent, ``descend`` is a
    one-layer combinator. The knot is tied lazily, so construction does
    not recurse.
    """
    cell = []
    rec = f.with_fn(lambda t: cell[0](t))
    whole = op(f, descend(rec))
    cell.append(whole.fn)
    return whole


def _flip(op):
    return lambda a, b: op(b, a)


def _tu_op(flavor):
    return lambda a, b: comb(flavor, a, b)


def _check_direction(direction):
    if direction not in ("td", "bu"):
        raise ValueError(f"direction must be 'td' or 'bu', not {direction!r}")


def full(direction, flavor, f):
    """Process every node: before its children (td) or after them (bu)."""
    _check_direction(direction)
    op = _tu_op(flavor)
    if direction == "bu":
        op = _flip(op)
    return traverse(op, lambda s: all_(flavor, s), flavor.check(f))


def once(direction, flavor, f):
    """Succeed at one node: the preorder-first (td) or postorder-first (bu) hit."""
    _check_direction(direction)
    flavor.check(f).effect.require_zero("once traversal")
    op = choice_s if direction == "td" else _flip(choice_s)
    return traverse(op, lambda s: one(flavor, s), f)


def stop(direction, flavor, f):
    """Process where ``f`` succeeds; elsewhere descend into all children.

    The bottom-up variant tries the children first, so it only reaches
    ``f`` at nodes where the traversal of some child fails.
    """
    _check_direction(direction)
    flavor.check(f).effect.require_zero("stop traversal")
    op = choice_s if direction == "td" else _flip(choice_s)
    return traverse(op, lambda s: all_(flavor, s), f)


def full_td(flavor, f):
    return full("td", flavor, f)


def full_bu(flavor, f):
    return full("bu", flavor, f)


def once_td(flavor, f):
    return once("td", flavor, f)


def once_bu(flavor, f):
    return once("bu", flavor, f)


def stop_td(flavor, f):
    return stop("td", flavor, f)


def stop_bu(flavor, f):
    return stop("bu", flavor, f)


def propagate(op, descend, f, update, env):
    """Traversal that threads an environment down the tree.

    ``f(env)`` is the strategy applied at a node; ``update(env, node)``
    returns the effectful environment for the node's children, computed
    from the node as it was before ``f`` ran.
    """

    def at(e):
        fe = f(e)
        bind = fe.effect.bind

        def run(t):
            def descent(t2):
                return bind(update(e, t), lambda e2: descend(at(e2)).fn(t2))

            return op(fe, fe.with_fn(descent)).fn(t)

        return fe.with_fn(run)

    return at(env)


def full_tdpe(flavor, f, update, env):
    return propagate(_tu_op(flavor), lambda s: all_(flavor, s), f, update, env)


def once_tdpe(flavor, f, update, env):
    return propagate(choice_s, lambda s: one(flavor, s), f, update, env)


def _once_td(f):
    return once("td", TPF if isinstance(f, TP) else PREDICATE, f)


def _one(f):
    return one_tp(f) if isinstance(f, TP) else one_tu(f)


def beloweq(flavor, p, f):
    """``f`` hit at or below the first node satisfying ``p``."""
    flavor.check(f)
    return _once_td(and_then(p, _once_td(f)))


def aboveeq(flavor, p, f):
    """``f`` hit at a node with a ``p`` witness at or below it."""
    flavor.check(f)
    return _once_td(and_then(_once_td(p), f))


def below(flavor, p, f):
    """``f`` hit strictly below a node satisfying ``p``."""
    flavor.check(f)
    return _once_td(and_then(p, _one(_once_td(f))))


def above(flavor, p, f):
    """``f`` hit at a node with a ``p`` witness strictly below it."""
    flavor.check(f)
    return _once_td(and_then(_one(_once_td(p)), f))


def belowlist(flavor, ps, f):
    """``f`` hit below a strictly nested chain of ``ps`` witnesses, outermost first."""
    flavor.check(f)
    s = _once_td(f)
    for p in reversed(ps):
        s = _once_td(and_then(p, _one(s)))
    return s


def _chain(ps, effect):
    c = const_tu(None, effect, result="unit")
    for p in reversed(ps):
        c = _one(_once_td(and_then(p, c)))
    return c


def abovelist(flavor, ps, f):
    """``f`` hit at a node above a strictly descending chain of ``ps`` witnesses."""
    flavor.check(f)
    if not ps:
        return _once_td(f)
    return _once_td(and_then(_chain(ps, f.effect), f))


def prepost(flavor, f, pre, post):
    """``belowlist`` over ``pre`` of an ``f`` hit that also has a ``post`` chain below it."""
    flavor.check(f)
    inner = and_then(_chain(post, f.effect), f) if post else f
    return belowlist(flavor, pre, inner)

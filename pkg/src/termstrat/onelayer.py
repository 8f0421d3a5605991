"""Folding over constructor applications and the one-layer traversals built on it.

``hfoldr`` treats a node as its constructor followed by its children. For a
node ``C c0 c1 ... ck-1`` (``c0`` leftmost) it computes::

    step(ck-1, step(ck-2, ... step(c0, base(C)) ...))

so the leftmost child is folded first and effects run left to right.
"""

from dataclasses import dataclass
from typing import Callable

from .core import TP
from .term import rebuild


@dataclass(frozen=True)
class FoldAlgebra:
    """``step(child, acc) -> Eff`` and ``base(head) -> Eff``."""

    step: Callable
    base: Callable


class NodeHead:
    """The bare constructor (or primitive value) of a node, before any children."""

    __slots__ = ("node",)

    def __init__(self, node):
        self.node = node

    @property
    def con(self):
        return self.node.con

    @property
    def value(self):
        return None if self.node.con is not None else self.node.value

    @property
    def sort(self):
        return self.node.sort

    @property
    def arity(self):
        return len(self.node.children)

    def __repr__(self):
        return f"NodeHead({self.con if self.con is not None else self.value!r})"


class Spine:
    """A constructor applied to the children collected so far."""

    __slots__ = ("head", "kids")

    def __init__(self, head, kids=()):
        self.head = head
        self.kids = kids

    def attach(self, child):
        return Spine(self.head, self.kids + (child,))

    def build(self):
        node = self.head.node
        old = node.children
        kids = self.kids
        if len(kids) == len(old) and all(a is b for a, b in zip(kids, old)):
            return node
        return rebuild(node, kids)


def hfoldr(alg, t, effect):
    acc = alg.base(NodeHead(t))
    bind = effect.bind
    step = alg.step
    for child in t.children:
        acc = bind(acc, lambda r, c=child: step(c, r))
    return acc


def rebuild_algebra():
    """The algebra whose fold rebuilds its input."""
    return FoldAlgebra(
        step=lambda c, spine: (spine.attach(c),),
        base=lambda head: (Spine(head),),
    )


def _build(spine):
    return (spine.build(),)


def all_tp(s):
    """Apply ``s`` to every child, left to right, keeping the constructor."""
    effect = s.effect
    bind = effect.bind
    f = s.fn

    def step(c, spine):
        return bind(f(c), lambda c2: (spine.attach(c2),))

    alg = FoldAlgebra(step, lambda head: (Spine(head),))

    def run(t):
        if not t.children:
            return (t,)
        return bind(hfoldr(alg, t, effect), _build)

    return TP(run, effect)


def one_tp(s):
    """Replace the leftmost child on which ``s`` succeeds (all of them under nondet).

    The fold carries the unchanged prefix next to the processed variants,
    the pairing that turns the catamorphic ``hfoldr`` into the paramorphic
    fold this needs.
    """
    effect = s.effect
    effect.require_zero("one")
    bind = effect.bind
    plus = effect.plus_lazy
    f = s.fn

    def step(c, acc):
        original, processed = acc
        done = tuple(p.attach(c) for p in processed)
        new = plus(done, lambda: tuple(original.attach(c2) for c2 in f(c)))
        return ((original.attach(c), new),)

    alg = FoldAlgebra(step, lambda head: ((Spine(head), ()),))

    def run(t):
        if not t.children:
            return ()
        # the outer fold never fails; pairs are threaded with a plain bind
        (_, processed), = hfoldr(alg, t, _ONE_SHOT)
        return bind(processed, _build)

    return TP(run, effect)


def all_tu(monoid, s):
    """Combine the results of ``s`` on every child with ``monoid``, left to right."""
    effect = s.effect
    bind = effect.bind
    combine = monoid.combine
    f = s.fn
    empty = (monoid.empty,)

    def step(c, acc):
        return bind(f(c), lambda a: (combine(acc, a),))

    alg = FoldAlgebra(step, lambda head: empty)

    def run(t):
        if not t.children:
            return empty
        return hfoldr(alg, t, effect)

    return s.with_fn(run)


def one_tu(s):
    """Result of ``s`` on the leftmost child where it succeeds (every child under nondet)."""
    effect = s.effect
    effect.require_zero("one")
    plus = effect.plus_lazy
    f = s.fn

    def step(c, found):
        return (plus(found, lambda: f(c)),)

    alg = FoldAlgebra(step, lambda head: ((),))

    def run(t):
        if not t.children:
            return ()
        (found,) = hfoldr(alg, t, _ONE_SHOT)
        return found

    return s.with_fn(run)


class _OneShot:
    # bind for folds whose every step yields exactly one value
    @staticmethod
    def bind(m, k):
        return k(m[0])


_ONE_SHOT = _OneShot()

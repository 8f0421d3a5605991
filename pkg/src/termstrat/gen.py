"""Random well-sorted terms, for property tests and benchmarks."""

import random as _random

from .signature import BOOL, BUILTIN_SORTS, INT, STR, UNIT
from .term import Prim, _new_app

_ALPHABET = 'ab z"\\\n'


def _prim(sort, rng):
    if sort == INT:
        if rng.random() < 0.05:
            return Prim(rng.choice((-(2**63), 2**63 - 1, 0)))
        return Prim(rng.randint(-5, 5))
    if sort == BOOL:
        return Prim(rng.random() < 0.5)
    if sort == STR:
        return Prim("".join(rng.choice(_ALPHABET) for _ in range(rng.randint(0, 4))))
    if sort == UNIT:
        return Prim(None)
    raise ValueError(f"not a builtin sort: {sort}")


class TermGenerator:
    """Draws terms of a sort under depth and node-count limits."""

    def __init__(self, sig):
        self.sig = sig
        inf = float("inf")
        size = {s: 1 for s in BUILTIN_SORTS}
        height = {s: 1 for s in BUILTIN_SORTS}
        size.update({s: inf for s in sig.sorts})
        height.update({s: inf for s in sig.sorts})
        changed = True
        while changed:
            changed = False
            for decl in sig.constructors.values():
                sz = 1 + sum(size[a] for a in decl.args)
                ht = 1 + max((height[a] for a in decl.args), default=0)
                if sz < size[decl.result]:
                    size[decl.result] = sz
                    changed = True
                if ht < height[decl.result]:
                    height[decl.result] = ht
                    changed = True
        self.min_size = size
        self.min_height = height

    def _con_size(self, decl):
        return 1 + sum(self.min_size[a] for a in decl.args)

    def _con_height(self, decl):
        return 1 + max((self.min_height[a] for a in decl.args), default=0)

    def term(self, sort, rng, max_depth=6, max_nodes=200):
        if self.min_size[sort] > max_nodes or self.min_height[sort] > max_depth:
            raise ValueError(f"no term of sort {sort} fits the limits")
        return self._gen(sort, rng, max_depth, max_nodes)[0]

    def _gen(self, sort, rng, depth, budget):
        if sort in BUILTIN_SORTS:
            return _prim(sort, rng), 1
        options = [
            d for d in self.sig.constructors_of(sort)
            if self._con_size(d) <= budget and self._con_height(d) <= depth
        ]
        # favour constructors with sort-valued children so terms grow
        weights = [(1 + sum(a not in BUILTIN_SORTS for a in d.args)) ** 2 for d in options]
        decl = rng.choices(options, weights)[0]
        left = budget - 1
        kids = []
        used = 1
        reserve = sum(self.min_size[a] for a in decl.args)
        for a in decl.args:
            reserve -= self.min_size[a]
            kid, n = self._gen(a, rng, depth - 1, left - reserve)
            kids.append(kid)
            left -= n
            used += n
        return _new_app(decl, tuple(kids)), used


def random_term(sig, sort, rng=None, max_depth=6, max_nodes=200):
    rng = rng or _random.Random()
    return TermGenerator(sig).term(sort, rng, max_depth, max_nodes)

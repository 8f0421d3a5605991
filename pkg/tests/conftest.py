import importlib
import random

import pytest

from termstrat import (
    NONDET,
    PARTIAL,
    TOTAL,
    MonoUpdate,
    Prim,
    adhoc_tp,
    adhoc_tu,
    const_tu,
    fail_tp,
    fail_tu,
    id_tp,
    load_signature,
)
from termstrat.gen import TermGenerator

# (criterion, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")


SIG_TEXT = """
(sort Expr) (sort Stmt) (sort Block)
(con Lit Expr (Int))
(con Flag Expr (Bool))
(con Var Expr (Str))
(con Add Expr (Expr Expr))
(con Neg Expr (Expr))
(con Pair Expr (Int Int))
(con And Expr (Bool Bool))
(con Nil Expr ())
(con Assign Stmt (Str Expr))
(con Seq Stmt (Stmt Stmt))
(con While Stmt (Expr Block))
(con Noop Stmt (Unit))
(con Empty Block ())
(con Cons Block (Stmt Block))
"""

SORTS = ("Expr", "Stmt", "Block")


@pytest.fixture(scope="session")
def sig():
    return load_signature(SIG_TEXT)


@pytest.fixture(scope="session")
def gen(sig):
    return TermGenerator(sig)


def random_terms(sig, n, seed, max_depth=6, max_nodes=200):
    g = TermGenerator(sig)
    rng = random.Random(seed)
    return [g.term(rng.choice(SORTS), rng, max_depth, max_nodes) for _ in range(n)]


@pytest.fixture(scope="session")
def terms(sig):
    return random_terms(sig, 1000, seed=20021)


def kernel_modules():
    mods = [importlib.import_module("termstrat._pykernels")]
    try:
        mods.append(importlib.import_module("termstrat._ckernels"))
    except ImportError:
        pass
    return mods


@pytest.fixture(params=kernel_modules(), ids=lambda m: m.__name__.rsplit(".", 1)[1])
def kernels(request):
    return request.param


# Sample strategies used throughout.

def negate_bool(effect=TOTAL):
    return adhoc_tp(id_tp(effect), MonoUpdate("Bool", lambda t: (Prim(not t.value),)))


def return_int(effect=PARTIAL):
    return adhoc_tu(fail_tu(effect), MonoUpdate("Int", lambda t: (t.value,), "tu"))


INT_MAX = 2**63 - 1


def int_incr(effect=PARTIAL):
    """Increment Ints; fails at the top of the 64-bit range."""
    return adhoc_tp(fail_tp(effect), MonoUpdate(
        "Int", lambda t: (Prim(t.value + 1),) if t.value < INT_MAX else ()))


def int_or_zero(effect=PARTIAL):
    return adhoc_tu(const_tu(0, effect), MonoUpdate("Int", lambda t: (t.value,), "tu"))


def int_fanout(effect=NONDET):
    """Nondet TP: Ints have two successors, negative Ints none."""

    def fn(t):
        if t.value < 0:
            return ()
        return (Prim(t.value + 1), Prim(t.value + 2)) if t.value < 2**62 else ()

    return adhoc_tp(fail_tp(effect), MonoUpdate("Int", fn))


def int_values_nd(effect=NONDET):
    """Nondet TU: Ints yield themselves and their double; zero yields nothing."""

    def fn(t):
        return () if t.value == 0 else (t.value, 2 * t.value)

    return adhoc_tu(fail_tu(effect), MonoUpdate("Int", fn, "tu"))


# Independent oracles: plain recursion, no package traversal code.

def oracle_preorder(t):
    out = [t]
    for c in t.children:
        out.extend(oracle_preorder(c))
    return out


def oracle_postorder(t):
    out = []
    for c in t.children:
        out.extend(oracle_postorder(c))
    out.append(t)
    return out


def oracle_paths(t, path=()):
    """(path, node) pairs in preorder."""
    out = [(path, t)]
    for i, c in enumerate(t.children):
        out.extend(oracle_paths(c, path + (i,)))
    return out


# Random TP strategies under PARTIAL for law checking.

def _swap_pair(effect):
    from termstrat import App

    def fn(t):
        if t.con == "Pair":
            a, b = t.children
            return (App(t.decl, [b, a]),)
        return ()

    return adhoc_tp(fail_tp(effect), MonoUpdate("Expr", fn))


def _neg_wrap(effect):
    def fn(t):
        if t.con == "Neg":
            return (t.children[0],)
        return ()

    return adhoc_tp(fail_tp(effect), MonoUpdate("Expr", fn))


def tp_atoms(effect=PARTIAL):
    return [
        id_tp(effect),
        fail_tp(effect),
        adhoc_tp(id_tp(effect), MonoUpdate("Bool", lambda t: (Prim(not t.value),))),
        int_incr(effect),
        _swap_pair(effect),
        _neg_wrap(effect),
    ]


def random_tp(rng, depth=3, effect=PARTIAL):
    from termstrat import all_tp, choice_s, one_tp, seq_s

    atoms = tp_atoms(effect)
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(atoms)
    kind = rng.choice(("seq", "choice", "all", "one"))
    if kind == "seq":
        return seq_s(random_tp(rng, depth - 1, effect), random_tp(rng, depth - 1, effect))
    if kind == "choice":
        return choice_s(random_tp(rng, depth - 1, effect), random_tp(rng, depth - 1, effect))
    if kind == "all":
        return all_tp(random_tp(rng, depth - 1, effect))
    return one_tp(random_tp(rng, depth - 1, effect))


def tu_atoms(effect=PARTIAL):
    return [
        const_tu(0, effect),
        const_tu(3, effect),
        fail_tu(effect),
        return_int(effect),
        int_or_zero(effect),
    ]


def random_tu(rng, depth=3, effect=PARTIAL):
    from termstrat import choice_s, one_tu, seq_s

    if depth == 0 or rng.random() < 0.3:
        return rng.choice(tu_atoms(effect))
    kind = rng.choice(("seq", "choice", "one"))
    if kind == "seq":
        return seq_s(random_tp(rng, depth - 1, effect), random_tu(rng, depth - 1, effect))
    if kind == "choice":
        return choice_s(random_tu(rng, depth - 1, effect), random_tu(rng, depth - 1, effect))
    return one_tu(random_tu(rng, depth - 1, effect))


def observe(s, t):
    """Observable outcome of applying ``s``: its results, or the error type."""
    from termstrat import TermStratError

    try:
        return ("ok", s(t))
    except TermStratError as exc:
        return ("error", type(exc).__name__)

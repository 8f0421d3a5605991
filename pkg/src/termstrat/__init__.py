"""Functional strategies: generic traversal over signature-checked terms."""

from ._kernels import COMPILED
from .core import (
    TP,
    TU,
    MonoUpdate,
    Strategy,
    adhoc,
    adhoc_tp,
    adhoc_tu,
    and_then,
    choice_s,
    const_tu,
    fail_s,
    fail_tp,
    fail_tu,
    id_tp,
    pass_s,
    seq_s,
)
from .dsl import elaborate, parse_strategy, print_strategy
from .effects import MONOIDS, NONDET, PARTIAL, TOTAL, Monoid, monoid_registry
from .errors import (
    ArityMismatch,
    EffectMismatch,
    FlavorError,
    ParseError,
    RuleError,
    SignatureError,
    SortError,
    SortMismatch,
    SortViolation,
    StrategyError,
    TermStratError,
    UnknownConstructor,
    UnsupportedEffect,
)
from .onelayer import FoldAlgebra, all_tp, all_tu, hfoldr, one_tp, one_tu
from .rules import compile_rule, instantiate, load_rules, match
from .runtime import run_deep
from .schemes import (
    PREDICATE,
    TPF,
    TUF,
    above,
    aboveeq,
    abovelist,
    below,
    beloweq,
    belowlist,
    comb,
    full,
    full_bu,
    full_td,
    full_tdpe,
    once,
    once_bu,
    once_td,
    once_tdpe,
    prepost,
    propagate,
    skip,
    stop,
    stop_bu,
    stop_td,
    traverse,
)
from .signature import ConstructorDecl, Signature, constructor_lookup, load_signature
from .term import (
    App,
    Prim,
    Term,
    check_term,
    children,
    make_app,
    node_count,
    parse_term,
    postorder,
    preorder,
    print_term,
    rebuild,
    sort_of,
    term_depth,
)

__version__ = "0.1.0"

__all__ = [
    "above",
    "aboveeq",
    "abovelist",
    "adhoc",
    "adhoc_tp",
    "adhoc_tu",
    "all_tp",
    "all_tu",
    "and_then",
    "App",
    "ArityMismatch",
    "below",
    "beloweq",
    "belowlist",
    "check_term",
    "children",
    "choice_s",
    "comb",
    "compile_rule",
    "COMPILED",
    "const_tu",
    "constructor_lookup",
    "ConstructorDecl",
    "EffectMismatch",
    "elaborate",
    "fail_s",
    "fail_tp",
    "fail_tu",
    "FlavorError",
    "FoldAlgebra",
    "full",
    "full_bu",
    "full_td",
    "full_tdpe",
    "hfoldr",
    "id_tp",
    "instantiate",
    "load_rules",
    "load_signature",
    "make_app",
    "match",
    "Monoid",
    "monoid_registry",
    "MONOIDS",
    "MonoUpdate",
    "node_count",
    "NONDET",
    "once",
    "once_bu",
    "once_td",
    "once_tdpe",
    "one_tp",
    "one_tu",
    "parse_strategy",
    "parse_term",
    "ParseError",
    "PARTIAL",
    "pass_s",
    "postorder",
    "PREDICATE",
    "preorder",
    "prepost",
    "Prim",
    "print_strategy",
    "print_term",
    "propagate",
    "rebuild",
    "RuleError",
    "run_deep",
    "seq_s",
    "Signature",
    "SignatureError",
    "skip",
    "sort_of",
    "SortError",
    "SortMismatch",
    "SortViolation",
    "stop",
    "stop_bu",
    "stop_td",
    "Strategy",
    "StrategyError",
    "Term",
    "term_depth",
    "TermStratError",
    "TOTAL",
    "TP",
    "TPF",
    "traverse",
    "TU",
    "TUF",
    "UnknownConstructor",
    "UnsupportedEffect",
]

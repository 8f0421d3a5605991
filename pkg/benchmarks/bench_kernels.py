"""Time the pure-Python kernels against the compiled ones.

    python3 benchmarks/bench_kernels.py [--terms N] [--depth D] [--repeat R]
"""

import argparse
import random
import timeit

from termstrat import Prim, load_signature, make_app
from termstrat import _pykernels
from termstrat.gen import TermGenerator

try:
    from termstrat import _ckernels
except ImportError:  # built without the extension
    _ckernels = None

SIG = """
(sort Expr)
(con Lit Expr (Int))
(con Flag Expr (Bool))
(con Add Expr (Expr Expr))
(con Neg Expr (Expr))
(con If Expr (Bool Expr Expr))
"""


def workloads(sig, n_terms, depth):
    rng = random.Random(0)
    gen = TermGenerator(sig)
    forest = [gen.term("Expr", rng, max_depth=8, max_nodes=400) for _ in range(n_terms)]
    deep = make_app(sig, "Lit", [Prim(0)])
    for _ in range(depth):
        deep = make_app(sig, "Neg", [deep])
    twin = make_app(sig, "Lit", [Prim(0)])
    for _ in range(depth):
        twin = make_app(sig, "Neg", [twin])
    cons = sig.constructors
    return {
        "preorder": lambda k: [k.preorder(t) for t in forest],
        "postorder": lambda k: [k.postorder(t) for t in forest],
        "node_count": lambda k: [k.node_count(t) for t in forest],
        "term_depth": lambda k: [k.term_depth(t) for t in forest],
        "render": lambda k: [k.render(t) for t in forest],
        "check_tree": lambda k: [k.check_tree(cons, t) for t in forest],
        "terms_equal(deep)": lambda k: k.terms_equal(deep, twin),
        "render(deep)": lambda k: k.render(deep),
        "check_tree(deep)": lambda k: k.check_tree(cons, deep),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=300, help="random terms per workload")
    ap.add_argument("--depth", type=int, default=50_000, help="depth of the chain term")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    sig = load_signature(SIG)
    work = workloads(sig, args.terms, args.depth)
    impls = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<20}" + "".join(f"{name:>12}" for name, _ in impls) + f"{'speedup':>10}")
    for label, fn in work.items():
        times = []
        for _, mod in impls:
            assert fn(mod) == fn(impls[0][1])
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        row = f"{label:<20}" + "".join(f"{t * 1000:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    if _ckernels is None:
        print("compiled kernels not built; only the Python column is shown")


if __name__ == "__main__":
    main()

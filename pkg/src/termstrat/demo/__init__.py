"""Bundled demos, each checked against its expected output."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List

DATA = Path(__file__).resolve().parent


def path(name):
    return str(DATA / name)


@dataclass(frozen=True)
class Demo:
    name: str
    sig: str
    term: str
    strategy: str
    expected: str
    flavor: str = "tp"
    effect: str = "partial"
    monoid: str = "int_sum"
    rules: List[str] = field(default_factory=list)
    status: int = 0

    def config(self):
        from ..cli import RunConfig

        return RunConfig(
            sig=path(self.sig), term=path(self.term), rules=[path(r) for r in self.rules],
            strategy=self.strategy, flavor=self.flavor, effect=self.effect,
            monoid=self.monoid,
        )


DEMOS = [
    Demo(
        "test42", "running.sig", "term1.term",
        "belowlist([rule p1, rule p2], rule sortb2int)",
        "Just 42\n", flavor="tu", rules=["running.rules"],
    ),
    Demo(
        "test42-nochain", "running.sig", "nochain.term",
        "belowlist([rule p1, rule p2], rule sortb2int)",
        "Nothing\n", flavor="tu", rules=["running.rules"], status=1,
    ),
    Demo(
        "negate-all-booleans", "exprs.sig", "exprs.term", "full_td(rule negate_bool)",
        "(If (Flag false) (Add (Lit 1) (Pair 2 3)) (Add (And true false) (Flag true)))\n",
        effect="total", rules=["exprs.rules"],
    ),
    Demo(
        "collect-ints", "exprs.sig", "exprs.term", "full_td(rule return_int)",
        "[1,2,3]\n", flavor="tu", effect="total", monoid="list_concat",
        rules=["exprs.rules"],
    ),
    Demo(
        "full-td", "running.sig", "term1.term", "full_td(adhoc(skip, sortb2int))",
        "Just [7,3,99,1,5,1,2,3,42]\n", flavor="tu", monoid="list_concat",
        rules=["running.rules"],
    ),
    Demo(
        "stop-td", "running.sig", "term1.term", "stop_td(rule sortb2int)",
        "Just [7,1,1]\n", flavor="tu", monoid="list_concat", rules=["running.rules"],
    ),
    Demo(
        "propagate-depth", "running.sig", "term1.term",
        "full_tdpe(adhoc(skip, b_env), adhoc(keep, b_inc), 0)",
        "Just [0,1,2,0,1,0,1,1,2]\n", flavor="tu", monoid="list_concat",
        rules=["running.rules"],
    ),
]


def run_demos(names=(), out=None):
    """Run the selected demos (all by default); returns 0 iff every output matches."""
    import sys

    from ..cli import run

    out = out or sys.stdout
    by_name = {d.name: d for d in DEMOS}
    unknown = [n for n in names if n not in by_name]
    if unknown:
        out.write(f"unknown demo(s): {', '.join(unknown)}\n")
        return 2
    ok = True
    for demo in [by_name[n] for n in names] if names else DEMOS:
        status, text = run(demo.config())
        passed = text == demo.expected and status == demo.status
        ok &= passed
        shown = text.strip() or "(no output)"
        out.write(f"{'PASS' if passed else 'FAIL'} {demo.name}: {shown} (exit {status})\n")
        if not passed:
            out.write(f"     expected: {demo.expected.strip()} (exit {demo.status})\n")
    return 0 if ok else 1

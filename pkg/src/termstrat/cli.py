"""Command-line driver: ``termstrat apply | check | demo``.

Exit status: 0 success, 1 the strategy failed (partial effect), 2 bad
input or configuration.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from .core import TP
from .dsl import elaborate, parse_strategy
from .effects import MONOIDS, by_name
from .errors import TermStratError
from .rules import load_rules
from .runtime import run_deep
from .signature import load_signature
from .term import format_value, parse_term

FORMATS = ("auto", "term", "value", "list")


class UsageError(TermStratError):
    pass


@dataclass
class RunConfig:
    sig: str
    term: Optional[str] = None
    rules: List[str] = field(default_factory=list)
    strategy: Optional[str] = None
    strategy_file: Optional[str] = None
    flavor: str = "tp"
    effect: str = "partial"
    monoid: str = "int_sum"
    out: Optional[str] = None
    format: str = "auto"

    def validate(self):
        if self.flavor not in ("tp", "tu"):
            raise UsageError(f"--flavor must be tp or tu, not {self.flavor!r}")
        if self.effect not in ("total", "partial", "nondet"):
            raise UsageError(f"--effect must be total, partial or nondet, not {self.effect!r}")
        if self.flavor == "tu" and self.monoid not in MONOIDS:
            raise UsageError(f"unknown monoid {self.monoid!r}")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.format == "term" and self.flavor != "tp":
            raise UsageError("--format term needs --flavor tp")
        if self.effect == "nondet" and self.format in ("term", "value"):
            raise UsageError("nondet runs print a result list; use --format auto or list")
        if (self.strategy is None) == (self.strategy_file is None):
            raise UsageError("give exactly one of --strategy and --strategy-file")


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def prepare(cfg):
    """Load and validate every input; returns (term, strategy)."""
    cfg.validate()
    sig = load_signature(_read(cfg.sig))
    rules = {}
    for path in cfg.rules:
        rules = load_rules(_read(path), sig, rules)
    text = cfg.strategy if cfg.strategy is not None else _read(cfg.strategy_file)
    expr = parse_strategy(text.strip())
    strategy = elaborate(expr, rules, cfg.flavor, by_name(cfg.effect), MONOIDS[cfg.monoid])
    term = parse_term(_read(cfg.term), sig) if cfg.term is not None else None
    return term, strategy


def render_results(results, cfg, strategy):
    """Text output and exit status for a finished run."""
    if cfg.format == "list":
        return format_value(list(results)) + "\n", 0
    if cfg.effect == "nondet":
        return "".join(format_value(r) + "\n" for r in results), 0
    if not results:
        return ("Nothing\n" if cfg.format == "auto" else ""), 1
    (value,) = results
    text = format_value(value)
    if cfg.effect == "partial" and cfg.format == "auto":
        text = "Just " + text
    return text + "\n", 0


def run(cfg):
    """Apply the configured strategy; returns (exit status, stdout text)."""
    term, strategy = prepare(cfg)
    if term is None:
        raise UsageError("--term is required")
    results = run_deep(strategy, term)
    if isinstance(strategy, TP):
        for r in results:
            if r.sort != term.sort:
                raise TermStratError("strategy changed the sort of the term")
    text, status = render_results(results, cfg, strategy)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
        return status, ""
    return status, text


def check(cfg):
    prepare(cfg)
    return 0, ""


def _add_run_args(p, need_strategy=True):
    p.add_argument("--sig", required=True, help="signature file")
    p.add_argument("--term", help="term file")
    p.add_argument("--rules", action="append", default=[], help="rules file (repeatable)")
    p.add_argument("--strategy", help="strategy expression")
    p.add_argument("--strategy-file", help="file holding the strategy expression")
    p.add_argument("--flavor", choices=("tp", "tu"), default="tp")
    p.add_argument("--effect", choices=("total", "partial", "nondet"), default="partial")
    p.add_argument("--monoid", choices=sorted(MONOIDS), default="int_sum",
                   help="monoid combining TU results (default: int_sum)")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.add_argument("--format", choices=FORMATS, default="auto")


def _config(args):
    return RunConfig(
        sig=args.sig, term=args.term, rules=args.rules, strategy=args.strategy,
        strategy_file=args.strategy_file, flavor=args.flavor, effect=args.effect,
        monoid=args.monoid, out=args.out, format=args.format,
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="termstrat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_args(sub.add_parser("apply", help="apply a strategy to a term"))
    _add_run_args(sub.add_parser("check", help="validate inputs without running"))
    demo = sub.add_parser("demo", help="run the bundled demos and check their outputs")
    demo.add_argument("names", nargs="*", help="demo names (default: all)")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "demo":
            from .demo import run_demos

            return run_demos(args.names, stdout)
        cfg = _config(args)
        status, text = (run if args.command == "apply" else check)(cfg)
    except (TermStratError, OSError, ValueError) as exc:
        print(f"termstrat: error: {exc}", file=stderr)
        return 2
    stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Subcommands: eval, equal, portrait, quotient, series, liegraph, verify.  All
reports are JSON except the DOT graph.  Exit status 2 signals a parse or
usage error, with the message on standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .errors import DomainError, ExprSyntaxError, LevelTooLarge
from .expr import element
from .portrait import branch_portrait, epsilon_portrait
from .power_series import series_report as power_series_report
from .series import jennings_series, ranks, series_report

MAX_LEVEL_ENV = "SELFSIM_LIE_MAX_LEVEL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def max_level() -> int:
    raw = os.environ.get(MAX_LEVEL_ENV, "8")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_LEVEL_ENV} must be an integer, got {raw!r}")


def _check_level(k: int) -> None:
    cap = max_level()
    if not 1 <= k <= cap:
        raise UsageError(f"level {k} outside 1..{cap} (raise {MAX_LEVEL_ENV} to allow more)")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def cmd_eval(args) -> int:
    g = element(args.expr)
    out = epsilon_portrait(g, args.depth).to_json()
    out["word"] = g.word
    print(_dump(out))
    return 0


def cmd_equal(args) -> int:
    from .tree import equals

    same = equals(element(args.left), element(args.right))
    print("equal" if same else "different")
    return 0 if same else 1


def cmd_portrait(args) -> int:
    print(_dump(branch_portrait(element(args.expr), args.depth).to_json()))
    return 0


def cmd_quotient(args) -> int:
    _check_level(args.level)
    s = jennings_series(args.level, args.max_n)
    prev = jennings_series(args.level - 1, args.max_n) if args.level > 1 else None
    print(_dump(series_report(args.level, s, prev)))
    return 0


def cmd_series(args) -> int:
    r = None
    if args.from_quotient is not None:
        k = args.from_quotient
        _check_level(k)
        r = ranks(jennings_series(k, args.terms + 1))
        if len(r) < args.terms:
            # the quotient became trivial: remaining ranks vanish
            r.values = r.values + [0] * (args.terms - len(r))
    report = power_series_report(args.terms, r)
    report["ranks"] = "quotient level %d" % args.from_quotient if r is not None else "closed form"
    print(_dump(report))
    return 0


def cmd_liegraph(args) -> int:
    from .lie import lie_graph, to_dot

    g = lie_graph(args.max_degree)
    dot = to_dot(g)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    if args.json or not args.dot:
        print(_dump(g.to_json()))
    return 0


def cmd_verify(args) -> int:
    from .acceptance import Verifier, VerifyConfig

    cfg = VerifyConfig()
    if args.level is not None:
        _check_level(args.level)
        if args.level < 2:
            raise UsageError("verify needs level >= 2 to compare consecutive levels")
        cfg.level = args.level
    if args.max_degree is not None:
        cfg.max_degree = args.max_degree
    only = set(args.only) if args.only else None
    results = Verifier(cfg).run(only)
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="selfsim-lie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    e = sub.add_parser("eval", help="epsilon portrait of an element")
    e.add_argument("expr")
    e.add_argument("--depth", type=int, default=3)
    e.set_defaults(func=cmd_eval)

    q = sub.add_parser("equal", help="decide equality of two elements")
    q.add_argument("left")
    q.add_argument("right")
    q.set_defaults(func=cmd_equal)

    b = sub.add_parser("portrait", help="branch portrait of an element")
    b.add_argument("expr")
    b.add_argument("--depth", type=int, default=2)
    b.set_defaults(func=cmd_portrait)

    qt = sub.add_parser("quotient", help="dimension series of a finite quotient")
    qt.add_argument("--level", type=int, required=True)
    qt.add_argument("--max-n", type=int, default=None)
    qt.set_defaults(func=cmd_quotient)

    s = sub.add_parser("series", help="Jennings product and partition sums")
    s.add_argument("--terms", type=int, required=True)
    s.add_argument("--from-quotient", type=int, default=None, metavar="K")
    s.set_defaults(func=cmd_series)

    lg = sub.add_parser("liegraph", help="Lie graph as DOT and JSON")
    lg.add_argument("--max-degree", type=int, required=True)
    lg.add_argument("--dot", default=None, help="write DOT to this file")
    lg.add_argument("--json", action="store_true", help="also print JSON when writing DOT")
    lg.set_defaults(func=cmd_liegraph)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--level", type=int, default=None)
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    v.set_defaults(func=cmd_verify)
    return p


def _check_positive(args) -> None:
    for name in ("depth", "max_n", "terms", "max_degree"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _check_positive(args)
        return args.func(args)
    except (UsageError, ExprSyntaxError, LevelTooLarge) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

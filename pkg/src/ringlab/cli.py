"""Command line entry point: ``ringlab {verify,radicals,check,catalog,search}``.

Exit codes: 0 when everything matched expectations, 1 on a deviation and 2 on
a usage error (bad arguments, unknown names, malformed expressions).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from .monoids import MonoidError, default_fragment
from .radicals import class_predicates, radical_profile
from .registry import (Config, ExpressionError, report_json, report_ok, run_registry,
                       search)
from .rings import RingError, SearchBudgetExceeded, SizeCapExceeded
from .verdicts import DEFAULT_BUDGET, VARIANTS, check_armendariz

EXIT_OK = 0
EXIT_DEVIATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _ring(name):
    try:
        return cat.ring(name)
    except (KeyError, RingError, ValueError) as exc:
        raise UsageError(f"unknown ring {name!r}: {exc}") from exc


def _monoid(name):
    try:
        return cat.monoid(name)
    except (MonoidError, KeyError, ValueError) as exc:
        raise UsageError(f"unknown monoid {name!r}: {exc}") from exc


def cmd_verify(args) -> int:
    cfg = Config(budget=args.budget, degree=args.degree, jobs=args.jobs)

    def progress(r):
        line = f"{r['outcome']:9s} {r['id']}"
        if args.timings:
            line += f"  ({r['wall_time']:.2f}s)"
        print(line, file=sys.stderr if args.json == "-" else sys.stdout, flush=True)

    report = run_registry(args.filter, cfg, timings=args.timings, progress=progress)
    text = report_json(report)
    if args.json == "-":
        sys.stdout.write(text)
    elif args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    s = report["suite"]["summary"]
    summary = ", ".join(f"{k} {v}" for k, v in s.items())
    print(f"{report['suite']['checks']} checks: {summary}",
          file=sys.stderr if args.json == "-" else sys.stdout)
    return EXIT_OK if report_ok(report) else EXIT_DEVIATION


def cmd_radicals(args) -> int:
    R = _ring(args.ring)
    out = radical_profile(R).to_dict()
    out["classes"] = class_predicates(R).as_dict()
    print(_dump(out))
    return EXIT_OK


def cmd_check(args) -> int:
    R = _ring(args.ring)
    M = _monoid(args.monoid)
    degree = args.degree if args.degree is not None else (3 if R.order <= 4 else 2)
    if degree < 0:
        raise UsageError("--degree must be non-negative")
    frag = default_fragment(M, degree)
    try:
        v = check_armendariz(R, frag, args.property, budget=args.budget, jobs=args.jobs)
    except (SearchBudgetExceeded, SizeCapExceeded) as exc:
        print(_dump({"property": args.property, "outcome": "Skipped", "reason": str(exc)}))
        return EXIT_DEVIATION
    print(_dump(v.to_dict()))
    return EXIT_OK


def cmd_catalog(args) -> int:
    print(_dump(cat.catalog()))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        hits = search(args.expression)
    except ExpressionError as exc:
        raise UsageError(str(exc)) from exc
    print(_dump(hits))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringlab", description="Finite rings, monoid rings and "
                                "bounded Armendariz-type verdicts.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the theorem registry")
    v.add_argument("--filter", default=None, help="shell-style check id pattern")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--degree", type=int, default=None, help="override the nat fragment degree")
    v.add_argument("--budget", type=int, default=Config().budget, help="cells per verdict")
    v.add_argument("--json", default=None, metavar="PATH", help="write the report ('-' for stdout)")
    v.add_argument("--timings", action="store_true",
                   help="add wall-clock times (the report is then no longer reproducible)")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radicals", help="nil set and radicals of a catalog ring")
    r.add_argument("--ring", required=True)
    r.set_defaults(func=cmd_radicals)

    c = sub.add_parser("check", help="decide one property at bounds")
    c.add_argument("--ring", required=True)
    c.add_argument("--monoid", required=True)
    c.add_argument("--property", choices=list(VARIANTS), default="lower-nil")
    c.add_argument("--degree", type=int, default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("catalog", help="list built-in rings, monoids and endomorphisms")
    k.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", help="filter catalog rings by a class expression")
    s.add_argument("expression", help="e.g. 'two_primal & !semicommutative'")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("ringlab: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ringlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``uqfm verify``, ``uqfm list`` and ``uqfm export-matrix``."""
from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .checks import FAIL, PASS, SUITES, WARN, Options, all_checks, checks_for

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _spin_list(text: str) -> tuple:
    parts = [t for t in text.replace(",", " ").split() if t]
    try:
        values = tuple(int(t) for t in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"spins must be integers (2s), got {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("spins must be nonnegative integers")
    return values


def _q_half(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0 or value == 1:
        raise argparse.ArgumentTypeError("q^(1/2) must be positive and different from 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uqfm", description="Exact verification of Freidel-Maillet type identities")
    parser.add_argument("--version", action="version", version=f"uqfm {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", nargs="+", default=["all"], choices=list(SUITES) + ["all"], metavar="NAME")
    v.add_argument("--spin", nargs="+", default=None, metavar="TWOS",
                   help="twice the spins used by representation checks (default 0 1 2)")
    v.add_argument("--q-half", type=_q_half, default=Fraction(5, 7), metavar="P/Q",
                   help="rational value of q^(1/2) for numeric cross-checks")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--strict", action="store_true", help="treat WARN as failure")
    v.add_argument("--no-timing", action="store_true", help="report millis as 0 (byte-stable output)")
    v.add_argument("--jobs", type=int, default=None, metavar="N",
                   help="worker processes (default: CPU count, at most 8)")

    sub.add_parser("list", help="list check identifiers")

    n = sub.add_parser("normalize", help="print the PBW normal form of an element literal")
    n.add_argument("--pres", default="SL2", choices=("GL2", "SL2", "SL2H", "ALG_A"))
    n.add_argument("element", help="literal such as 'E*F^2', 'F^2*K^-1*E' or 'Zt1*W0'")

    e = sub.add_parser("export-matrix", help="write a named matrix as JSON")
    e.add_argument("--object", required=True)
    e.add_argument("--spin", type=int, required=True, metavar="TWOS")
    e.add_argument("--out", required=True)
    return parser


def _run_one(c, opts: Options, timing: bool) -> dict:
    start = time.perf_counter()
    try:
        out = c.run(opts)
        status, summary = out.status, out.summary
    except Exception as exc:  # a crashing check is a failed check
        status, summary = FAIL, f"{type(exc).__name__}: {exc}"[:200]
    millis = int(round((time.perf_counter() - start) * 1000)) if timing else 0
    return {"check_id": c.check_id, "paper_anchor": c.anchor, "status": status,
            "residual_summary": summary, "millis": millis}


def _run_by_id(check_id: str, opts: Options, timing: bool) -> dict:
    from .checks import REGISTRY

    return _run_one(REGISTRY[check_id], opts, timing)


def run_checks(checks, opts: Options, fail_fast: bool = False, timing: bool = True, jobs: int = 1) -> list:
    """Run checks, in worker processes when ``jobs > 1``; results come back in input order."""
    checks = list(checks)
    if jobs <= 1 or len(checks) <= 1:
        results = []
        for c in checks:
            results.append(_run_one(c, opts, timing))
            if fail_fast and results[-1]["status"] == FAIL:
                break
        return results
    ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else None)
    results = []
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
        futures = [pool.submit(_run_by_id, c.check_id, opts, timing) for c in checks]
        for fut in futures:
            results.append(fut.result())
            if fail_fast and results[-1]["status"] == FAIL:
                for rest in futures:
                    rest.cancel()
                break
    return results


def report(results: list, opts: Options, suites, strict: bool, fail_fast: bool) -> dict:
    return {
        "version": __version__,
        "options": {
            "suites": sorted(set(suites)),
            "spins": list(opts.spins),
            "q_half": str(opts.q_half),
            "strict": strict,
            "fail_fast": fail_fast,
        },
        "checks": sorted(results, key=lambda r: r["check_id"]),
    }


def exit_code(results: list, strict: bool) -> int:
    bad = {FAIL, WARN} if strict else {FAIL}
    return EXIT_FAIL if any(r["status"] in bad for r in results) else EXIT_OK


def _render_text(doc: dict) -> str:
    lines = []
    width = max((len(r["check_id"]) for r in doc["checks"]), default=10)
    for r in doc["checks"]:
        line = f"{r['status']:<4}  {r['check_id']:<{width}}  {r['paper_anchor']}"
        if r["residual_summary"]:
            line += f"  | {r['residual_summary']}"
        lines.append(line)
    counts = {s: sum(1 for r in doc["checks"] if r["status"] == s) for s in (PASS, WARN, FAIL)}
    lines.append(f"{len(doc['checks'])} checks: {counts[PASS]} passed, {counts[WARN]} warned, "
                 f"{counts[FAIL]} failed")
    return "\n".join(lines)


def _verify(args, out) -> int:
    spins = _spin_list(" ".join(args.spin)) if args.spin else (0, 1, 2)
    opts = Options(spins=spins, q_half=args.q_half)
    jobs = args.jobs if args.jobs is not None else min(8, os.cpu_count() or 1)
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    results = run_checks(checks_for(args.suite), opts, args.fail_fast, timing=not args.no_timing, jobs=jobs)
    doc = report(results, opts, args.suite, args.strict, args.fail_fast)
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(_render_text(doc) + "\n")
    return exit_code(results, args.strict)


def _list(out) -> int:
    for c in all_checks():
        out.write(f"{c.check_id}\t{c.suite}\t{c.anchor}\t{c.description}\n")
    return EXIT_OK


def _normalize(args, out) -> int:
    from .pbw import IllegalLetter, parse_element

    try:
        x = parse_element(args.element, args.pres)
    except IllegalLetter as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{x}\n")
    return EXIT_OK


def _export(args, out) -> int:
    from .matalg import EXPORTABLE, UnknownName
    from .reps import export_matrix

    if args.object not in EXPORTABLE:
        raise UsageError(f"unknown object {args.object!r}; choose from {', '.join(EXPORTABLE)}")
    if args.spin < 0:
        raise UsageError("--spin must be nonnegative")
    try:
        doc = export_matrix(args.object, args.spin, args.out)
    except UnknownName as exc:
        raise UsageError(str(exc)) from None
    out.write(f"wrote {args.object} (2s={args.spin}, {doc['dim']}x{doc['dim']}) to {args.out}\n")
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _verify(args, out)
        if args.command == "list":
            return _list(out)
        if args.command == "export-matrix":
            return _export(args, out)
        if args.command == "normalize":
            return _normalize(args, out)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (UsageError, argparse.ArgumentTypeError) as exc:
        sys.stderr.write(f"uqfm: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"uqfm: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: decompose, verify, scan-coverage, scan-mordell, square-scan,
tables. Exit codes: 0 success / certificate found, 1 bounded search
exhausted or verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .decompose import Certificate, Instance, Triple, trivial_decompose, verify_decomposition
from .report import (
    TABLE_IDS,
    TableRow,
    emit,
    regress_fixture,
    render_row,
    round_half_up,
)
from .scan import (
    PRESETS,
    ScanConfig,
    coverage_scan,
    formula_one_scan,
    formula_two_scan,
    mordell_scan,
    square_scan_fixed_x,
)

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # return-code contract: usage problems surface as exit code 2, not SystemExit
    def error(self, message):
        raise _UsageError(message)


def _int_ge(bound: int, name: str):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < bound:
            raise argparse.ArgumentTypeError(f"{name} must be >= {bound}, got {value}")
        return value

    return parse


def _add_bounds_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--preset", choices=sorted(PRESETS), help="named search-bound set")
    sub.add_argument("--x-factor", type=_int_ge(1, "--x-factor"), help="x scanned up to x-factor * n")
    sub.add_argument("--t-window", type=_int_ge(1, "--t-window"), help="t values probed per x")


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["csv", "json", "markdown"], default="csv")
    sub.add_argument("--out", help="write the row report to this path")


def _config(args, default_preset: str) -> ScanConfig:
    cfg = ScanConfig.preset(args.preset or default_preset)
    if args.x_factor or args.t_window:
        cfg = ScanConfig(
            x_ceiling_factor=args.x_factor or cfg.x_ceiling_factor,
            t_window=args.t_window or cfg.t_window,
        )
    return cfg


def _write_rows(args, rows: list[TableRow]) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(emit(rows, args.format))


def _percent(value: Fraction) -> str:
    return round_half_up(value * 100, 2)


def _describe(cert: Certificate) -> str:
    inst, t = cert.instance, cert.triple
    extra = [f"route {cert.route.value}", f"x={t.x}"]
    if cert.witness_t is not None:
        extra.append(f"t={cert.witness_t}")
    if cert.witness_q is not None:
        extra.append(f"q={cert.witness_q}")
    if cert.witness_k is not None:
        extra.append(f"k={cert.witness_k}")
    return f"{inst.a}/{inst.n} = 1/{t.x} + 1/{t.y} + 1/{t.z}   ({', '.join(extra)})"


def _regime_note(inst: Instance) -> None:
    if not inst.in_conjecture_regime:
        print(f"note: a={inst.a} is outside the conjecture regime (a >= 4)")


def _cmd_decompose(args) -> int:
    inst = Instance(args.a, args.n)
    _regime_note(inst)
    cfg = _config(args, "paper-tables")
    routes = {
        "trivial": lambda: trivial_decompose(inst),
        "formula-1": lambda: formula_one_scan(inst, cfg),
        "formula-2": lambda: formula_two_scan(inst, cfg),
    }
    order = [args.route] if args.route else ["trivial", "formula-1", "formula-2"]
    for name in order:
        cert = routes[name]()
        if cert is not None:
            print(_describe(cert))
            _write_rows(args, [render_row(inst, cert)])
            return 0
    print(f"no decomposition of {inst.a}/{inst.n} found within bounds")
    return 1


def _cmd_verify(args) -> int:
    inst = Instance(args.a, args.n)
    verdict = verify_decomposition(inst, Triple(args.x, args.y, args.z))
    word = "holds" if verdict.holds else "fails"
    print(f"{word}: {inst.a}/{inst.n} = {verdict.lhs} vs 1/{args.x} + 1/{args.y} + 1/{args.z} = {verdict.rhs}")
    return 0 if verdict.holds else 1


def _cmd_scan_coverage(args) -> int:
    inst = Instance(args.a, args.n_lo)  # validates a and the lower bound
    _regime_note(inst)
    cfg = _config(args, "paper-coverage")
    report = coverage_scan(
        args.a, args.n_lo, args.n_hi, cfg, jobs=args.jobs, checkpoint=args.checkpoint
    )
    print(
        f"coverage a={report.a} n in [{report.n_lo}, {report.n_hi}]: "
        f"captured {len(report.captured)}/{report.total} ({_percent(report.percent)}%)"
    )
    if report.recalcitrant:
        print("recalcitrant: " + ", ".join(str(n) for n in report.recalcitrant))
    else:
        print("recalcitrant: none")
    _write_rows(args, [render_row(c.instance, c) for c in report.captured])
    return 0


def _cmd_scan_mordell(args) -> int:
    cfg = _config(args, "paper-tables")
    report = mordell_scan(
        args.n_lo, args.n_hi, cfg, jobs=args.jobs, checkpoint=args.checkpoint
    )
    names = ", ".join(str(n) for n in report.exceptional) or "none"
    print(f"exceptional cases in [{report.n_lo}, {report.n_hi}] ({len(report.exceptional)}): {names}")
    if not report.exceptional:
        return 0
    print(f"verified {len(report.verified)}/{len(report.exceptional)} ({_percent(report.percent)}%)")
    if report.unverified:
        print("unverified: " + ", ".join(str(n) for n in report.unverified))
    _write_rows(args, [render_row(c.instance, c) for c in report.verified])
    return 0


def _cmd_square_scan(args) -> int:
    inst = Instance(args.a, args.n)
    if args.a * args.x <= args.n:
        raise _UsageError(f"need a*x > n, got {args.a}*{args.x} <= {args.n}")
    if args.t_lo > args.t_hi:
        raise _UsageError(f"need --t-from <= --t-to, got [{args.t_lo}, {args.t_hi}]")
    hits = square_scan_fixed_x(inst, args.x, args.t_lo, args.t_hi)
    for t, value, root in hits:
        print(f"t={t} value={value} root={root}")
    if not hits:
        print(f"no squares for a={args.a} n={args.n} x={args.x} with t in [{args.t_lo}, {args.t_hi}]")
        return 1
    return 0


def _cmd_tables(args) -> int:
    ids = TABLE_IDS if args.table == "all" else (args.table,)
    cfg = _config(args, "paper-tables")
    rows: list[TableRow] = []
    failures = 0
    for table_id in ids:
        result = regress_fixture(table_id, cfg)
        total = result.matched + len(result.mismatched)
        print(f"{table_id}: {result.matched}/{total} rows matched")
        for miss in result.mismatched:
            failures += 1
            print(f"  n={miss.n}: expected {miss.expected}, scan gave {miss.actual}")
        rows.extend(result.rescanned)
    _write_rows(args, rows)
    return 0 if failures == 0 else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="trifrac", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    ge1 = _int_ge(1, "value")
    a_arg = dict(type=_int_ge(2, "-a"), required=True, help="numerator a >= 2")
    n_arg = dict(type=_int_ge(2, "-n"), required=True, help="denominator n >= 2")

    p = sub.add_parser("decompose", help="find a certificate for a/n")
    p.add_argument("-a", **a_arg)
    p.add_argument("-n", **n_arg)
    p.add_argument("--route", choices=["trivial", "formula-1", "formula-2"], help="force one route")
    _add_bounds_flags(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("verify", help="check a/n = 1/x + 1/y + 1/z exactly")
    p.add_argument("-a", **a_arg)
    p.add_argument("-n", **n_arg)
    for flag in ("-x", "-y", "-z"):
        p.add_argument(flag, type=_int_ge(1, flag), required=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan-coverage", help="per-n capture sweep over a range")
    p.add_argument("-a", **a_arg)
    p.add_argument("--from", dest="n_lo", type=_int_ge(2, "--from"), required=True)
    p.add_argument("--to", dest="n_hi", type=_int_ge(2, "--to"), required=True)
    p.add_argument("--jobs", type=_int_ge(1, "--jobs"), default=os.cpu_count() or 1)
    p.add_argument("--checkpoint", help="resumable per-n record file")
    _add_bounds_flags(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_scan_coverage)

    p = sub.add_parser("scan-mordell", help="sweep the mod-840 exceptional cases (a=4)")
    p.add_argument("--from", dest="n_lo", type=_int_ge(2, "--from"), required=True)
    p.add_argument("--to", dest="n_hi", type=_int_ge(2, "--to"), required=True)
    p.add_argument("--jobs", type=_int_ge(1, "--jobs"), default=os.cpu_count() or 1)
    p.add_argument("--checkpoint", help="resumable per-n record file")
    _add_bounds_flags(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_scan_mordell)

    p = sub.add_parser("square-scan", help="list perfect squares of the t-polynomial at fixed x")
    p.add_argument("-a", **a_arg)
    p.add_argument("-n", **n_arg)
    p.add_argument("-x", type=ge1, required=True)
    p.add_argument("--t-from", dest="t_lo", type=ge1, required=True)
    p.add_argument("--t-to", dest="t_hi", type=ge1, required=True)
    p.set_defaults(fn=_cmd_square_scan)

    p = sub.add_parser("tables", help="regression against the shipped fixture tables")
    p.add_argument("--table", choices=list(TABLE_IDS) + ["all"], default="all")
    _add_bounds_flags(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_tables)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

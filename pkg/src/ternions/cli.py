"""Command-line front end.

Exit codes: 0 success, 1 verification or plane-axiom failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from ternions.galois import NonPrimeModulus
from ternions.modules import SIDES
from ternions.report import export_dot, report_json
from ternions.ring import LabelsUnavailable, enc_to_label, label_to_enc, ring_new
from ternions.snowflake import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    classify_all,
    core_with_verdict,
    default_workers,
    snowflake_from_submodules,
    twin_compare,
)
from ternions.verify import verify_paper


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        v = int(float(text)) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # SUPPRESS so a value given before the subcommand is not reset
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes (default: CPU count)")
    common.add_argument("--budget", type=_positive, default=argparse.SUPPRESS,
                        help=f"maximum tuples to enumerate (default {DEFAULT_BUDGET:.0e})")

    p = _Parser(prog="ternions", parents=[common],
                description="Free cyclic submodules over ternion rings and their snowflakes.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    t = sub.add_parser("tables", parents=[common], help="print addition/multiplication tables")
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--paper-labels", action="store_true", help="use the 0..7 labels (q=2)")

    def instance(name, helptext, side=True):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--n", type=_positive, default=2)
        if side:
            sp.add_argument("--side", choices=SIDES, default="left")
        sp.add_argument("--json", type=Path, metavar="PATH")
        return sp

    instance("classify", "count unimodular / free tuples and distinct submodules")
    instance("snowflake", "degree structure of the snowflake").add_argument(
        "--dot", type=Path, metavar="PATH")
    instance("core", "core geometry and projective plane check")
    instance("twin", "compare the left and right snowflakes", side=False)
    sub.add_parser("verify-paper", parents=[common],
                   help="replay the known facts for q=2")
    return p


def _emit(data: bytes, path: Path | None, summary: str) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        path.write_bytes(data)
        print(summary)


def _cmd_tables(args) -> int:
    ctx = ring_new(args.q)
    if args.paper_labels and ctx.q != 2:
        raise UsageError("--paper-labels requires --q 2")
    order = range(ctx.order)
    if args.paper_labels:
        order = [label_to_enc(ctx, k) for k in range(8)]
        name = lambda e: str(enc_to_label(ctx, e))  # noqa: E731
    else:
        name = lambda e: "".join(map(str, ctx.dec(e)))  # noqa: E731
    w = max(len(name(e)) for e in range(ctx.order))
    for sym, table in (("+", ctx.add_table), ("x", ctx.mul_table)):
        print(f"{sym:>{w}} | " + " ".join(f"{name(e):>{w}}" for e in order))
        print("-" * (w + 3 + (w + 1) * len(order)))
        for x in order:
            print(f"{name(x):>{w}} | " + " ".join(f"{name(int(table[x, y])):>{w}}" for y in order))
        print()
    return 0


def _run_instance(args):
    ctx = ring_new(args.q)
    rep = classify_all(ctx, args.n, args.side, budget=args.budget, workers=args.threads)
    return ctx, rep


def _cmd_classify(args) -> int:
    ctx, rep = _run_instance(args)
    _emit(report_json(ctx, rep), args.json,
          f"q={rep.q} n={rep.n} {rep.side}: {rep.nonunimodular_free} non-unimodular free "
          f"generators, {rep.distinct_submodules} distinct submodules")
    return 0


def _cmd_snowflake(args) -> int:
    ctx, rep = _run_instance(args)
    sf = snowflake_from_submodules(ctx, rep.n, rep.side, rep.submodules)
    core = core_with_verdict(ctx, sf)
    if args.dot is not None:
        args.dot.write_bytes(export_dot(ctx, sf, core))
    _emit(report_json(ctx, rep, sf), args.json,
          f"degree histogram {sf.histogram}, zero tuple degree {sf.zero_tuple_degree}")
    return 0


def _cmd_core(args) -> int:
    ctx, rep = _run_instance(args)
    sf = snowflake_from_submodules(ctx, rep.n, rep.side, rep.submodules)
    core = core_with_verdict(ctx, sf)
    v = core.verdict
    _emit(report_json(ctx, rep, sf, core), args.json,
          f"{len(core.points)} points, {len(core.lines)} lines, "
          f"projective plane: {None if v is None else v.is_projective_plane}")
    if v is not None and not v.is_projective_plane:
        print(f"plane axioms failed: {v.failures[0]}", file=sys.stderr)
        return 1
    return 0


def _cmd_twin(args) -> int:
    ctx = ring_new(args.q)
    twin = twin_compare(ctx, args.n, budget=args.budget, workers=args.threads)
    _emit(report_json(ctx, twin), args.json,
          f"histograms equal: {twin.histogram_equal}, core points equal: "
          f"{twin.core_points_equal}, core lines equal: {twin.core_lines_equal}, "
          f"transpose duality: {twin.transpose_duality}")
    return 0 if twin.all_equal else 1


def _cmd_verify(args) -> int:
    t0 = time.perf_counter()
    results = verify_paper()
    for r in results:
        print(f"[{'PASS' if r.ok else 'FAIL'}] {r.number}. {r.name}: {r.detail}")
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} checks passed in {time.perf_counter() - t0:.2f}s")
    return 0 if passed == len(results) else 1


COMMANDS = {
    "tables": _cmd_tables,
    "classify": _cmd_classify,
    "snowflake": _cmd_snowflake,
    "core": _cmd_core,
    "twin": _cmd_twin,
    "verify-paper": _cmd_verify,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        args.threads = getattr(args, "threads", None) or default_workers()
        args.budget = getattr(args, "budget", None) or DEFAULT_BUDGET
        return COMMANDS[args.command](args)
    except (UsageError, NonPrimeModulus, LabelsUnavailable, BudgetExceeded, OSError) as exc:
        print(f"ternions: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

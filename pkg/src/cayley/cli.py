"""Command-line surface: run check suites, print the result tables, return
machine-readable pass/fail.

Exit codes: 0 all checks pass, 1 at least one failure, 2 usage error.
Output is deterministic for fixed inputs; wall-clock timings are kept out
of the comparison body (a trailing section in markdown, a strippable
per-record field in JSON).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import checks, geometry
from .checks import CheckResult
from .exterior import str_key

TIMINGS_MARKER = "## timings"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------

def emit_report(results: list[CheckResult], fmt: str) -> bytes:
    if fmt == "json":
        payload = [r.to_json() for r in results]
        return (json.dumps(payload, sort_keys=True, indent=1) + "\n").encode()
    if fmt == "md":
        lines = ["| check | status | expected | actual |",
                 "|---|---|---|---|"]
        for r in results:
            exp = json.dumps(r.expected, sort_keys=True)
            act = json.dumps(r.actual, sort_keys=True)
            if len(exp) > 60:
                exp = exp[:57] + "..."
            if len(act) > 60:
                act = act[:57] + "..."
            lines.append(f"| {r.check_id} | {r.status} | {exp} | {act} |")
        passed = sum(1 for r in results if r.status == "pass")
        lines.append("")
        lines.append(f"passed {passed}/{len(results)}")
        lines.append("")
        lines.append(TIMINGS_MARKER)
        for r in results:
            lines.append(f"- {r.check_id}: {r.elapsed_ms} ms")
        return ("\n".join(lines) + "\n").encode()
    raise UsageError(f"unknown format {fmt!r}")


def comparison_body(report: bytes, fmt: str) -> bytes:
    """The deterministic part of a report: timings stripped."""
    if fmt == "json":
        payload = json.loads(report.decode())
        for record in payload:
            record.pop("elapsed_ms", None)
        return (json.dumps(payload, sort_keys=True, indent=1) + "\n").encode()
    if fmt == "md":
        text = report.decode()
        cut = text.find(TIMINGS_MARKER)
        return (text if cut < 0 else text[:cut]).encode()
    raise UsageError(f"unknown format {fmt!r}")


def _render_weights_table(point: str, subgroup) -> str:
    record = geometry.tangent_weights(point, subgroup)
    from .grassmann import chart, qname
    chart_vars = [qname(I) for I in chart(str_key(point)).variables]
    lines = ["| vector | weight |", "|---|---|"]
    for vec, w in record.tangent:
        parts = []
        for name, c in zip(chart_vars, vec):
            if not c:
                continue
            coeff = str(c)
            symbol = "d" + name[1:]
            if coeff == "1":
                parts.append(f"+ {symbol}" if parts else symbol)
            elif coeff == "-1":
                parts.append(f"- {symbol}" if parts else f"-{symbol}")
            else:
                parts.append(f"+ ({coeff})*{symbol}" if parts
                             else f"({coeff})*{symbol}")
        lines.append(f"| {' '.join(parts)} | {w} |")
    lines.append("")
    lines.append(f"positive weights: {record.positive_count}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "json"), default="md")
    common.add_argument("--out", default=None, help="write output to a file")

    parser = argparse.ArgumentParser(
        prog="cayley",
        description="exact verification suite for the complex Cayley Grassmannian")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common],
                            help="run one verification suite")
    verify.add_argument("suite", choices=sorted(checks.VERIFY_SUITES))

    sub.add_parser("fixed-points", parents=[common],
                   help="fixed-point membership and isolation")

    smooth = sub.add_parser("smoothness", parents=[common],
                            help="Jacobian ranks at fixed points")
    smooth.add_argument("--point", default=None, metavar="IJKL")

    weights = sub.add_parser("weights", parents=[common],
                             help="tangent weight tables")
    weights.add_argument("--point", default=None, metavar="IJKL")
    weights.add_argument("--subgroup", default=None, metavar="a,b,c")

    sub.add_parser("betti", parents=[common], help="positive-weight histogram")

    sigma = sub.add_parser("singular-locus", parents=[common],
                           help="singular locus identities")
    sigma.add_argument("--chart", default="0246", metavar="IJKL")

    sub.add_parser("g2-stabilizer", parents=[common],
                   help="root data and stabilizer subalgebra")

    report = sub.add_parser("report", parents=[common], help="run everything")
    report.add_argument("--all", action="store_true", required=True)
    return parser


def _parse_point(text: str) -> str:
    if len(text) != 4 or not text.isdigit():
        raise UsageError(f"point must be four digits, got {text!r}")
    idx = tuple(int(ch) for ch in text)
    if sorted(set(idx)) != list(idx) or max(idx) > 7:
        raise UsageError(f"point must be a sorted 4-subset of 0..7, got {text!r}")
    return text


def _parse_subgroup(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"subgroup must be three integers, got {text!r}")
    if len(parts) != 3:
        raise UsageError(f"subgroup must be three integers, got {text!r}")
    return parts


def _thread_pool_map():
    threads = int(os.environ.get("CAYLEY_THREADS", "0") or "0")
    if threads <= 1:
        return map, None
    pool = ThreadPoolExecutor(max_workers=threads)
    return pool.map, pool


def run(argv) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    parallel_map, pool = _thread_pool_map()
    extra_text = None
    try:
        if args.command == "verify":
            results = checks.VERIFY_SUITES[args.suite]()
        elif args.command == "fixed-points":
            results = checks.check_fixed_points()
        elif args.command == "smoothness":
            point = _parse_point(args.point) if args.point else None
            if point and point not in golden_fixed()["in_x"]:
                raise UsageError(f"{point} is not a fixed point of the variety")
            results = checks.check_smoothness(point, parallel_map=parallel_map)
        elif args.command == "weights":
            point = _parse_point(args.point) if args.point else None
            subgroup = (_parse_subgroup(args.subgroup) if args.subgroup
                        else geometry.DEFAULT_SUBGROUP)
            if point:
                if point not in golden_fixed()["in_x"]:
                    raise UsageError(f"{point} is not a fixed point of the variety")
                if point in golden_fixed()["singular"]:
                    raise UsageError(f"{point} is a singular point; no tangent table")
                if args.format == "md":
                    extra_text = _render_weights_table(point, subgroup)
            results = checks.check_weights(point, subgroup,
                                           parallel_map=parallel_map)
        elif args.command == "betti":
            results = checks.check_betti()
        elif args.command == "singular-locus":
            chart_text = _parse_point(args.chart)
            if chart_text != "0246":
                raise UsageError(
                    "linear generators are recorded for chart 0246 only")
            results = checks.check_singular_locus(str_key(chart_text))
        elif args.command == "g2-stabilizer":
            results = checks.check_g2_stabilizer()
        elif args.command == "report":
            results = checks.run_all(parallel_map=parallel_map)
        else:  # pragma: no cover - argparse guards this
            raise UsageError(f"unknown command {args.command}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    finally:
        if pool is not None:
            pool.shutdown()

    if extra_text is not None and args.format == "md":
        output = extra_text.encode()
    else:
        output = emit_report(results, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output.decode())
    return 0 if all(r.status != "fail" for r in results) else 1


def golden_fixed():
    from . import golden
    return golden.load_fixed_points()


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

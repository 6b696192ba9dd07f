"""Command-line front end.

Every rational crosses the interface as an exact ``n/d`` string. Exit codes:
0 success, 1 usage or parse error, 2 domain error, 3 theorem counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import cuboid as cuboid_mod
from .curve import Curve
from .errors import DomainError
from .exact import format_rational, parse_rational
from .search import TheoremReport, find_points, orbit, verify_theorem

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

REPORT_COLUMNS = ["p", "r", "p_bar", "s_squared", "conjugate_rational", "degenerate"]

log = logging.getLogger("cuboidcurve")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    common.add_argument("--q", type=_rational, required=True, metavar="Q")

    parser = _Parser(prog="cuboidcurve", description="Exact arithmetic on E(q).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = cmd("check", help="test whether (p, r) lies on E(q)")
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)

    p = cmd("lift", help="find r >= 0 above p, if rational")
    p.add_argument("--p", type=_rational, required=True)

    p = cmd("add", help="group law")
    for name in ("--p1", "--r1", "--p2", "--r2"):
        p.add_argument(name, type=_rational, required=True)

    p = cmd("mul", help="n-fold multiple of a point")
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--n", type=_nonnegative_int, required=True)

    p = cmd("conjugate", help="conjugate point and its rationality")
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)

    p = cmd("cuboid", help="cuboid from generators q, p and space diagonal d")
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--d", type=_rational, required=True)

    for name in ("search", "verify-theorem"):
        p = cmd(name)
        p.add_argument("--height", type=_positive_int, required=True)
        p.add_argument("--jobs", type=_positive_int, default=1)

    p = cmd("orbit", help="multiples P, 2P, ..., nP")
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--n", type=_positive_int, required=True)

    return parser


def _flatten(record: dict) -> dict:
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            for sub_key, sub_value in _flatten(value).items():
                flat[f"{key}_{sub_key}"] = sub_value
        else:
            flat[key] = value
    return flat


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def render(result, fmt: str) -> str:
    if fmt == "json":
        body = result.as_record() if isinstance(result, TheoremReport) else result
        return json.dumps(body, indent=2) + "\n"

    if isinstance(result, TheoremReport):
        rows, columns = result.rows(), REPORT_COLUMNS
    else:
        rows = [_flatten(r) for r in (result if isinstance(result, list) else [result])]
        columns = []
        for row in rows:
            columns += [k for k in row if k not in columns]

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k, "")) for k in columns})
        return buf.getvalue()

    lines = []
    for row in rows:
        lines.append(" ".join(f"{k}={_cell(row[k])}" for k in columns if row.get(k, "") != ""))
    return "\n".join(lines) + "\n"


def execute(args) -> tuple[object, int]:
    curve = Curve(args.q)
    cmd = args.command
    if cmd == "check":
        return {"on_curve": curve.contains(args.p, args.r)}, EXIT_OK
    if cmd == "lift":
        P = curve.lift(args.p)
        if P is None:
            return {"found": False}, EXIT_OK
        return {"found": True, "r": format_rational(P.r)}, EXIT_OK
    if cmd == "add":
        P1 = curve.point(args.p1, args.r1)
        P2 = curve.point(args.p2, args.r2)
        return curve.add(P1, P2).as_record(), EXIT_OK
    if cmd == "mul":
        return curve.scalar_mul(args.n, curve.point(args.p, args.r)).as_record(), EXIT_OK
    if cmd == "conjugate":
        return curve.conjugate_status(curve.point(args.p, args.r)).as_record(), EXIT_OK
    if cmd == "cuboid":
        return cuboid_mod.build(args.q, args.p, args.d).as_record(), EXIT_OK
    if cmd == "search":
        return [P.as_record() for P in find_points(curve, args.height, jobs=args.jobs)], EXIT_OK
    if cmd == "verify-theorem":
        report = verify_theorem(curve, args.height, jobs=args.jobs)
        log.info("verify-theorem finished in %.3fs", report.elapsed)
        return report, EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK
    if cmd == "orbit":
        points = orbit(curve, curve.point(args.p, args.r), args.n)
        if points.halted_at is not None:
            _error("exceptional_pair", f"orbit halted at multiple {points.halted_at}")
        return [P.as_record() for P in points], EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def _error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        result, code = execute(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except DomainError as exc:
        _error(type(exc).__name__, str(exc))
        return EXIT_DOMAIN
    sys.stdout.write(render(result, args.format))
    if code == EXIT_COUNTEREXAMPLE:
        _error("counterexample", "conjugate pair with both points rational found")
    return code


def main() -> None:
    sys.exit(run())

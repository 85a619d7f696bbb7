"""Command-line front-end.

Exit codes: 0 success, 1 a requested check failed, 2 usage or parameter
error, 3 a resource guard refused the computation.
"""

from __future__ import annotations

import argparse
import json
import sys

from cyclicpoly.cyclic import (
    PolytopeParams,
    build_triangle,
    f_vector_direct,
    f_vector_from_triangle,
    h_vector,
)
from cyclicpoly.errors import ParameterError, ResourceGuardError
from cyclicpoly.oracle import DEFAULT_ORACLE_CAP, enumerate_facets, oracle_f_vector
from cyclicpoly.shape import analyze_shape, audit_dip_propagation, find_dips
from cyclicpoly.sweep import (
    CHECKS,
    DEFAULT_ROUTE_EVERY,
    FORMATS,
    make_record,
    render,
    render_records,
    summary_lines,
    sweep_verify,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class _Out:
    """Collects output and writes it once to --out or stdout."""

    def __init__(self):
        self.chunks: list[bytes] = []

    def line(self, text: str = "") -> None:
        self.chunks.append((text + "\n").encode("utf-8"))

    def raw(self, data: bytes) -> None:
        self.chunks.append(data)

    def flush(self, path: str | None) -> None:
        data = b"".join(self.chunks)
        if path is None:
            sys.stdout.write(data.decode("utf-8"))
            sys.stdout.flush()
        else:
            with open(path, "wb") as fh:
                fh.write(data)


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _error(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _joined(xs) -> str:
    return " ".join(str(x) for x in xs)


def _oracle_cap(args) -> int:
    if args.oracle_cap > DEFAULT_ORACLE_CAP:
        _warn(
            f"oracle cap raised to {args.oracle_cap}; enumeration cost grows "
            "exponentially in v"
        )
    return args.oracle_cap


def cmd_fvector(args, out: _Out) -> int:
    p = PolytopeParams(args.v, args.d)
    routes = ["direct", "triangle", "oracle"] if args.route == "all" else [args.route]
    results = {}
    for route in routes:
        if route == "direct":
            results[route] = f_vector_direct(p)
        elif route == "triangle":
            results[route] = f_vector_from_triangle(build_triangle(p))
        else:
            results[route] = oracle_f_vector(p, cap=_oracle_cap(args))
    agree = len({r.entries for r in results.values()}) == 1
    if args.format == "text":
        if len(results) == 1:
            out.line(_joined(results[routes[0]]))
        else:
            for route, seq in results.items():
                out.line(f"{route}: {_joined(seq)}")
            out.line(f"routes agree: {str(agree).lower()}")
    else:
        out.raw(render_records([make_record(results[routes[0]])], args.format))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_hvector(args, out: _Out) -> int:
    p = PolytopeParams(args.v, args.d)
    h = h_vector(p)
    if args.format == "text":
        out.line(_joined(h))
    elif args.format == "json":
        out.line(json.dumps({"v": p.v, "d": p.d, "h_vector": [str(x) for x in h]}, separators=(",", ":")))
    else:
        out.line("v,d,h_vector")
        out.line(f"{p.v},{p.d},{';'.join(str(x) for x in h)}")
    return EXIT_OK


def cmd_triangle(args, out: _Out) -> int:
    p = PolytopeParams(args.v, args.d)
    tri = build_triangle(p)
    dips = [find_dips(row) for row in tri.rows]
    if args.format == "json":
        out.line(
            json.dumps(
                {
                    "v": p.v,
                    "d": p.d,
                    "rows": [[str(x) for x in row] for row in tri.rows],
                    "dips": dips,
                },
                separators=(",", ":"),
            )
        )
    elif args.format == "csv":
        out.line("k,row,dips")
        for k, row in enumerate(tri.rows):
            out.line(f"{k},{';'.join(str(x) for x in row)},{';'.join(str(j) for j in dips[k])}")
    else:
        for k, row in enumerate(tri.rows):
            note = f"  dips at {dips[k]}" if dips[k] else ""
            out.line(f"P({k}): {_joined(row)}{note}")
    if not args.audit:
        return EXIT_OK
    audit = audit_dip_propagation(p)
    for failure in audit.failures:
        print(f"audit: {failure}", file=sys.stderr)
    if args.format == "text":
        out.line(f"audit: {'PASS' if audit.passed else 'FAIL'}")
    return EXIT_OK if audit.passed else EXIT_FAIL


def cmd_check(args, out: _Out) -> int:
    p = PolytopeParams(args.v, args.d)
    seq = f_vector_direct(p)
    shape = analyze_shape(seq)
    if args.format == "text":
        out.line(f"{p}: {_joined(seq)}")
        out.line(f"log-concave: {str(shape.log_concave).lower()}")
        out.line(f"unimodal: {str(shape.unimodal).lower()}")
        if shape.unimodal:
            out.line(f"peak: {shape.peak_start}..{shape.peak_end}")
        out.line(f"dips: {shape.dips if shape.dips else 'none'}")
    else:
        out.raw(render_records([make_record(seq)], args.format))
    return EXIT_OK if shape.log_concave else EXIT_FAIL


def cmd_oracle(args, out: _Out) -> int:
    p = PolytopeParams(args.v, args.d)
    cap = _oracle_cap(args)
    seq = oracle_f_vector(p, cap=cap)
    if args.format == "text":
        out.line(_joined(seq))
        if args.facets:
            for facet in enumerate_facets(p, cap=cap):
                out.line("{" + ",".join(str(x) for x in facet) + "}")
    else:
        out.raw(render_records([make_record(seq)], args.format))
    return EXIT_OK


def _parse_checks(text: str) -> tuple[str, ...]:
    checks = tuple(c.strip() for c in text.split(",") if c.strip())
    bad = [c for c in checks if c not in CHECKS]
    if bad or not checks:
        raise argparse.ArgumentTypeError(
            f"checks must be a comma list drawn from {', '.join(CHECKS)}"
        )
    return checks


def cmd_sweep(args, out: _Out) -> int:
    if args.d_min > args.d_max or args.v_min > args.v_max:
        raise ParameterError("sweep ranges must be nonempty (min <= max)")
    report = sweep_verify(
        args.d_min,
        args.d_max,
        args.v_min,
        args.v_max,
        checks=args.checks,
        jobs=args.jobs,
        route_every=args.route_every,
    )
    out.raw(render(report, args.format))
    if args.format != "text":
        for line in summary_lines(report):
            print(line, file=sys.stderr)
        print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicpoly",
        description="Exact f- and h-vectors of cyclic polytopes C(v,d) and log-concavity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--v", type=int, required=True, help="number of vertices")
    single.add_argument("--d", type=int, required=True, help="dimension")

    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument(
        "--oracle-cap",
        type=int,
        default=DEFAULT_ORACLE_CAP,
        help=f"largest v the brute-force oracle accepts (default {DEFAULT_ORACLE_CAP})",
    )

    p = sub.add_parser("fvector", parents=[single, common, cap], help="print the extended f-vector")
    p.add_argument("--route", choices=["direct", "triangle", "oracle", "all"], default="direct")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("hvector", parents=[single, common], help="print the h-vector")
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("triangle", parents=[single, common], help="print the generalized Pascal triangle")
    p.add_argument("--audit", action="store_true", help="replay the dip-propagation argument on the triangle")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("check", parents=[single, common], help="shape analysis of the f-vector")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[single, common, cap], help="f-vector by Gale evenness enumeration")
    p.add_argument("--facets", action="store_true", help="also list the facets (text format)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", parents=[common], help="verify log-concavity over a range of (v,d)")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--v-min", type=int, default=1, help="pairs with v < d+1 are skipped")
    p.add_argument("--v-max", type=int, required=True)
    p.add_argument("--checks", type=_parse_checks, default=CHECKS, help=f"comma list of {','.join(CHECKS)}")
    p.add_argument(
        "--route-every",
        type=_positive,
        default=DEFAULT_ROUTE_EVERY,
        help="compare both f-vector routes on every N-th pair (default 50)",
    )
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Out()
    try:
        code = args.func(args, out)
    except ParameterError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except ResourceGuardError as exc:
        _error(f"{exc} (use --oracle-cap N)")
        return EXIT_GUARD
    try:
        out.flush(args.out)
    except OSError as exc:
        _error(f"cannot write output: {exc}")
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())

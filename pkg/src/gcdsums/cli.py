"""Command-line front end.

Commands:
  sieve     dump a function table as CSV (``n,value``)
  identity  per-k identity audits (``k,direct,identity,abs_gap``)
  scan      residual scan of a summatory target over an x grid
  delta     divisor-problem remainder diagnostics
  series    truncated Dirichlet series vs closed forms

Function arguments use the ``name[:param]`` grammar (``mu``, ``id``,
``one``, ``idpow:-0.5``, ``jordan:0.5``, ``conv:tau,one``).  Grids are
``geom:lo,hi,points`` (rounded to integers) or comma-separated values.

Exit status: 0 on success, 1 when a checked invariant fails (a JSON
report naming the violation is printed), 2 on unusable arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import asymptotics, csvio, identities, series
from .errors import DomainError
from .tables import parse_spec, sieve

IDENTITY_TOL = {"apostol": 1e-9, "toth": 1e-10, "cesaro": 1e-10}


def _parse_grid(text: str) -> np.ndarray:
    if text.startswith("geom:"):
        parts = text[5:].split(",")
        if len(parts) != 3:
            raise DomainError(f"bad grid spec {text!r}")
        lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
        return asymptotics.standard_grid(lo, hi, points)
    values = np.asarray([float(v) for v in text.split(",")], dtype=np.float64)
    return values


def _fail(report: dict) -> int:
    print(json.dumps(report, sort_keys=True))
    return 1


def cmd_sieve(args) -> int:
    spec = parse_spec(args.spec or args.f)
    table = sieve(spec, args.nmax)
    csvio.write_table(table, args.out)
    return 0


def cmd_identity(args) -> int:
    tol = IDENTITY_TOL[args.which]
    rows = []
    worst = (0.0, None)
    if args.which == "apostol":
        f = sieve(parse_spec(args.f), args.kmax)
        g = sieve(parse_spec(args.g), args.kmax)
        for k in range(1, args.kmax + 1):
            r = identities.log_sum_audit(f, g, k)
            rows.append((k, r.direct, r.via_identity, r.abs_gap))
            rel = r.abs_gap / (1.0 + abs(r.direct))
            if rel > worst[0]:
                worst = (rel, k)
    else:
        check = (identities.toth_identity if args.which == "toth"
                 else None)
        f = sieve(parse_spec(args.f), args.kmax) if args.which == "cesaro" else None
        for k in range(1, args.kmax + 1):
            lhs, rhs = (check(k) if check else identities.cesaro_identity(f, k))
            gap = abs(lhs - rhs)
            rows.append((k, lhs, rhs, gap))
            rel = gap / (1.0 + abs(lhs))
            if rel > worst[0]:
                worst = (rel, k)
    csvio.write_rows("k,direct,identity,abs_gap", rows, args.out)
    if worst[0] > tol:
        return _fail({"invariant": f"{args.which}-identity",
                      "k": worst[1], "relative_gap": worst[0], "limit": tol})
    return 0


def cmd_scan(args) -> int:
    grid = _parse_grid(args.grid)
    scan = asymptotics.residual_scan(args.target, grid, args.a)
    csvio.write_rows("x,exact,main,correction,residual,normalized",
                     scan.rows(), args.out)
    if args.write_calibration:
        a_text = f"{args.a:g}" if args.a is not None else ""
        asymptotics.write_calibration(
            [(args.target, a_text, scan.max_normalized())],
            args.write_calibration)
        return 0
    if args.check:
        calibration = asymptotics.load_calibration(args.calibration)
        a_text = f"{args.a:g}" if args.a is not None else ""
        key = (args.target, a_text)
        if key not in calibration:
            raise DomainError(f"no calibration row for {key}")
        limit = 2.0 * calibration[key]
        if scan.max_normalized() > limit:
            return _fail({"invariant": "residual-regression",
                          "target": args.target,
                          "max_normalized": scan.max_normalized(),
                          "limit": limit})
    return 0


def cmd_delta(args) -> int:
    if args.which == "point":
        grid = _parse_grid(args.grid)
        if args.a is None:
            rows = [(x, asymptotics.divisor_delta(x)) for x in grid]
        else:
            rows = [(x, asymptotics.divisor_delta_a(x, args.a)) for x in grid]
        csvio.write_rows("x,delta", rows, args.out)
    elif args.which == "integral":
        grid = _parse_grid(args.grid)
        rows = [(x, asymptotics.delta_integral_ratio(x)) for x in grid]
        csvio.write_rows("X,ratio", rows, args.out)
    else:  # series
        if args.a is None:
            raise DomainError("delta --which series requires --a")
        exact = asymptotics.divisor_delta_a(args.xmax, args.a)
        rows = []
        for n_terms in sorted({int(v) for v in args.K.split(",")}):
            approx = asymptotics.divisor_delta_a_series(args.xmax, args.a,
                                                        n_terms)
            rows.append((n_terms, approx, exact, abs(exact - approx)))
        csvio.write_rows("N,truncated,exact,gap", rows, args.out)
    return 0


def cmd_series(args) -> int:
    k_values = sorted({int(v) for v in args.K.split(",")})
    n_max = max(k_values)
    if args.which == "identity":
        f = sieve(parse_spec(args.f), n_max)
        g = sieve(parse_spec(args.g), n_max)
        rows = []
        for k in k_values:
            cmp = series.series_identity_compare(f, g, args.s, k)
            rows.append((cmp.s, cmp.truncation, cmp.lhs, cmp.rhs, cmp.gap))
        csvio.write_rows("s,K,lhs,rhs,gap", rows, args.out)
        gaps = [r[4] for r in rows]
        for prev, cur in zip(gaps, gaps[1:]):
            if cur > 1.5 * prev:
                return _fail({"invariant": "series-gap-trend",
                              "s": args.s, "gaps": gaps})
        return 0
    if args.which == "bracket":
        f = sieve(parse_spec(args.f), n_max)
        rows = []
        ok = True
        for k in k_values:
            b = series.series_theta_bracket(f, args.s, k)
            rows.append((b.s, b.truncation, b.lhs, b.lo, b.hi))
            ok = ok and b.contains
        csvio.write_rows("s,K,lhs,lo,hi", rows, args.out)
        if not ok:
            return _fail({"invariant": "series-theta-bracket", "s": args.s})
        return 0
    # mu-report: compare the two closed-form candidates for the id,mu series
    from .tables import ID, MU
    id_table = sieve(ID, n_max)
    mu_table = sieve(MU, n_max)
    rows = []
    for k in k_values:
        r = series.mu_series_report(args.s, k, id_table, mu_table)
        rows.append((r.s, r.truncation, r.lhs,
                     int(r.matches_constant_tail), int(r.matches_ratio_tail)))
    csvio.write_rows("s,K,lhs,matches_constant_tail,matches_ratio_tail",
                     rows, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdsums",
        description="Diagnostics for logarithm-weighted gcd-sum averages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="dump a function table as CSV")
    p.add_argument("--spec", help="function spec (name[:param])")
    p.add_argument("--f", help="alias for --spec")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_sieve)

    p = sub.add_parser("identity", help="per-k identity audits")
    p.add_argument("--which", choices=sorted(IDENTITY_TOL), default="apostol")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--g", default="mu")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_identity)

    p = sub.add_parser("scan", help="residual scan over an x grid")
    p.add_argument("--target", required=True,
                   choices=sorted(asymptotics.SCAN_TARGETS)
                   + sorted(asymptotics.STATISTICS))
    p.add_argument("--grid", default="geom:1e3,1e6,7")
    p.add_argument("--a", type=float)
    p.add_argument("--check", action="store_true",
                   help="compare against the calibration file")
    p.add_argument("--calibration", help="calibration file path")
    p.add_argument("--write-calibration", metavar="PATH",
                   help="write this scan's normalized maximum to PATH")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("delta", help="divisor remainder diagnostics")
    p.add_argument("--which", choices=["point", "integral", "series"],
                   default="point")
    p.add_argument("--grid", default="geom:1e3,1e6,4")
    p.add_argument("--a", type=float)
    p.add_argument("--xmax", type=float, default=1e4)
    p.add_argument("--K", default="10,100,1000",
                   help="truncation counts for --which series")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("series", help="Dirichlet series comparisons")
    p.add_argument("--which", choices=["identity", "bracket", "mu-report"],
                   default="identity")
    p.add_argument("--f", default="one")
    p.add_argument("--g", default="one")
    p.add_argument("--s", type=float, default=3.0)
    p.add_argument("--K", default="100,1000,10000")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sieve" and not (args.spec or args.f):
        parser.error("sieve requires --spec")
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage(), file=sys.stderr, end="")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Batch command-line surface.

Subcommands:

    compare     the six classical means plus requested family orders at (a, b)
    scan        profile table of the family and the classical means over a grid
    thresholds  solve every sharp comparison order, JSON report
    series      exact log-defect coefficients, both routes, plus the kernel
    verify      grid-check one part of the comparison theorem
    moments     third-moment bounds, analytic or seeded Monte Carlo

Output is CSV or JSON (``--format``), to stdout or ``--out``.  CSV uses UTF-8,
LF line endings, a mandatory header row and 17-significant-digit numbers.
JSON reports carry ``schema_version``, ``command``, ``results`` and
``witnesses``.  Runs are deterministic: the only randomness is the Monte
Carlo draw, fed from ``--seed`` through NumPy's ``default_rng`` (PCG64).

Exit codes: 0 success, 1 verification/solver failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Iterable, Sequence

from .classical import MEAN_CHAIN, Mean, mean_value, ratio_to_a
from .errors import BracketError, MeansError
from .inequalities import (
    identric_limit_defect_root,
    series_table,
    solve_threshold,
    verify_part,
    _CATALOG_ORDER,
)
from .jensen import MomentReport, cubic_moment_bounds
from .lambda_family import lambda_mean, lambda_ratio

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------


def _parse_range(spec: str, what: str) -> list[float]:
    """Accept 'lo:hi:count' (inclusive linspace), 'a,b,c' or a single value."""
    spec = spec.strip()
    try:
        if ":" in spec:
            lo_s, hi_s, count_s = spec.split(":")
            lo, hi, count = float(lo_s), float(hi_s), int(count_s)
            if count < 1:
                raise ValueError
            if count == 1:
                return [lo]
            step = (hi - lo) / (count - 1)
            return [lo + i * step for i in range(count)]
        if "," in spec:
            values = [float(tok) for tok in spec.split(",") if tok.strip()]
            if not values:
                raise ValueError
            return values
        return [float(spec)]
    except ValueError:
        raise MeansError(
            f"malformed {what} range {spec!r}; use 'lo:hi:count', 'a,b,c' or a number"
        ) from None


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(header: Sequence[str], rows: Iterable[Sequence[object]],
               out_path: str | None) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            _fmt(cell) if isinstance(cell, float) else str(cell) for cell in row
        ))
    _emit("\n".join(lines) + "\n", out_path)


def _write_json(command: str, results: object, witnesses: object,
                out_path: str | None, **extra: object) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "results": results,
        "witnesses": witnesses,
    }
    payload.update(extra)
    _emit(json.dumps(payload, indent=2) + "\n", out_path)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_compare(args: argparse.Namespace) -> int:
    a, b = args.a, args.b
    rows = []
    for index, kind in enumerate(MEAN_CHAIN):
        rows.append((kind.value, mean_value(kind, a, b), index))
    for s in args.s or []:
        rows.append((f"lambda[{s:g}]", lambda_mean(s, a, b).value, len(rows)))
    rows.sort(key=lambda row: (row[1], row[2]))
    table = [(name, value) for name, value, _ in rows]
    if args.format == "json":
        _write_json("compare", [{"kind": n, "value": v} for n, v in table], [],
                    args.out, a=a, b=b)
    else:
        _write_csv(("kind", "value"), table, args.out)
    return 0


_SCAN_HEADER = ("s", "t", "lambda_over_A", "H_over_A", "G_over_A",
                "L_over_A", "I_over_A", "S_over_A")


def _cmd_scan(args: argparse.Namespace) -> int:
    s_values = _parse_range(args.s, "s")
    t_values = _parse_range(args.t, "t")
    profiles = {
        kind: [ratio_to_a(kind, t) for t in t_values]
        for kind in (Mean.HARMONIC, Mean.GEOMETRIC, Mean.LOGARITHMIC,
                     Mean.IDENTRIC, Mean.GINI)
    }
    rows = []
    for s in s_values:  # s-major, then t
        for i, t in enumerate(t_values):
            rows.append((
                s, t, lambda_ratio(s, t),
                profiles[Mean.HARMONIC][i], profiles[Mean.GEOMETRIC][i],
                profiles[Mean.LOGARITHMIC][i], profiles[Mean.IDENTRIC][i],
                profiles[Mean.GINI][i],
            ))
    if args.format == "json":
        _write_json("scan", [dict(zip(_SCAN_HEADER, row)) for row in rows], [],
                    args.out)
    else:
        _write_csv(_SCAN_HEADER, rows, args.out)
    return 0


def _cmd_thresholds(args: argparse.Namespace) -> int:
    wanted = None
    if args.targets:
        wanted = {Mean.parse(token).value for token in args.targets.split(",")}
    results: dict[str, dict] = {}
    witnesses = []
    failed = False
    for target, side in _CATALOG_ORDER:
        if wanted is not None and target.value not in wanted:
            continue
        key = f"{target.value}.{side}"
        try:
            solved = solve_threshold(target, side, tol=args.tol)
        except BracketError as exc:
            results[key] = {"target": target.value, "side": side,
                            "failed": True, "error": str(exc)}
            failed = True
            continue
        entry = {
            "target": solved.target,
            "side": solved.side,
            "bracket": list(solved.bracket),
            "critical_s": solved.critical_s,
            "witness_t": solved.witness_t,
            "witness_one_minus_t": solved.witness_one_minus_t,
            "tolerance": solved.tolerance,
            "iterations": solved.iterations,
        }
        if target is Mean.IDENTRIC and side == "lower":
            root = identric_limit_defect_root()
            entry["tau_root"] = root
            entry["tau_root_delta"] = abs(solved.critical_s - root)
        results[key] = entry
        witnesses.append({"target": solved.target, "side": solved.side,
                          "t": solved.witness_t,
                          "one_minus_t": solved.witness_one_minus_t})
    _write_json("thresholds", results, witnesses, args.out,
                partial=failed)
    return 1 if failed else 0


def _cmd_series(args: argparse.Namespace) -> int:
    table = series_table(args.n_max)
    rows = []
    for n in range(args.n_max + 1):
        conv = float(table.c_convolution[n])
        closed = float(table.c_closed[n])
        agree = table.c_convolution[n] == table.c_closed[n]
        rows.append((n, conv, closed, float(table.d[n]), agree))
    if args.format == "json":
        _write_json(
            "series",
            [
                {"n": n, "c_n_convolution": conv, "c_n_closed": closed,
                 "d_n": d, "agree": agree}
                for n, conv, closed, d, agree in rows
            ],
            [], args.out,
        )
    else:
        _write_csv(("n", "c_n_convolution", "c_n_closed", "d_n", "agree"),
                   rows, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    s_values = _parse_range(args.s, "s") if args.s else None
    if args.t:
        t_values = _parse_range(args.t, "t")
    elif args.grid:
        count = max(2, args.grid)
        step = (1.0 - 2e-6) / (count - 1)
        t_values = [1e-6 + i * step for i in range(count)]
    else:
        t_values = None
    report = verify_part(args.part, s_values, t_values)
    results = {
        "part": report.part,
        "passed": report.passed,
        "checks": report.checks,
        "violations": [dataclasses.asdict(v) for v in report.violations],
        "notes": list(report.notes),
    }
    witnesses = [dataclasses.asdict(w) for w in report.sharpness]
    if args.format == "csv":
        rows = [(v.claim, v.s, v.t, v.lhs, v.rhs) for v in report.violations]
        _write_csv(("claim", "s", "t", "lhs", "rhs"), rows, args.out)
    else:
        _write_json("verify", results, witnesses, args.out)
    return 0 if report.passed else 1


def _cmd_moments(args: argparse.Namespace) -> int:
    if args.dist == "uniform":
        import numpy as np

        rng = np.random.default_rng(args.seed)
        draws = rng.uniform(args.lo, args.hi, args.draws)
        report = MomentReport.from_values(draws.tolist())
        source = {"dist": "uniform", "lo": args.lo, "hi": args.hi,
                  "draws": args.draws, "seed": args.seed,
                  "generator": "numpy.random.default_rng (PCG64)"}
    elif args.dist in ("two-point", "discrete"):
        if not args.points:
            raise MeansError(f"--dist {args.dist} needs --points")
        points = [float(tok) for tok in args.points.split(",")]
        if args.dist == "two-point" and len(points) != 2:
            raise MeansError("two-point distribution needs exactly 2 points")
        if args.probs:
            probs = [float(tok) for tok in args.probs.split(",")]
        else:
            probs = [1.0 / len(points)] * len(points)
        report = MomentReport.from_values(points, probs)
        source = {"dist": args.dist, "points": points, "probs": probs,
                  "mode": "analytic"}
    elif args.dist == "constant":
        c = args.value
        report = MomentReport(c, c * c, c ** 3, 0.0, c, c)
        source = {"dist": "constant", "value": c, "mode": "analytic"}
    else:  # pragma: no cover - argparse restricts choices
        raise MeansError(f"unknown distribution {args.dist!r}")

    bounds = cubic_moment_bounds(report)
    results = {
        "source": source,
        "report": dataclasses.asdict(report),
        "lower": bounds.lower,
        "upper": bounds.upper,
        "third_moment": report.third_moment,
        "holds": bounds.holds,
    }
    if args.format == "csv":
        rows = [
            ("mean", report.mean), ("variance", report.variance),
            ("support_min", report.support_min), ("support_max", report.support_max),
            ("lower", bounds.lower), ("third_moment", report.third_moment),
            ("upper", bounds.upper), ("holds", bounds.holds),
        ]
        _write_csv(("key", "value"), rows, args.out)
    else:
        _write_json("moments", results, [], args.out)
    return 0


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jensenmeans",
        description="Quotient means of Jensen gaps: tables, scans and "
                    "sharp-threshold certification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default depends on the command)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")
    common.add_argument("--tol", type=float, default=1e-10,
                        help="solver tolerance where applicable")
    common.add_argument("--grid", type=int, default=None,
                        help="grid density where applicable")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the Monte Carlo generator")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", parents=[common],
                       help="classical means and family values at one pair")
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("--s", type=float, action="append", default=[],
                   help="family order to include (repeatable)")
    p.set_defaults(func=_cmd_compare, default_format="csv")

    p = sub.add_parser("scan", parents=[common],
                       help="profile table over an (s, t) grid")
    p.add_argument("--s", required=True, help="order range 'lo:hi:count'")
    p.add_argument("--t", required=True, help="coordinate range 'lo:hi:count'")
    p.set_defaults(func=_cmd_scan, default_format="csv")

    p = sub.add_parser("thresholds", parents=[common],
                       help="solve all sharp comparison orders")
    p.add_argument("--targets", default=None,
                   help="comma list of mean letters to restrict to")
    p.set_defaults(func=_cmd_thresholds, default_format="json")

    p = sub.add_parser("series", parents=[common],
                       help="log-defect coefficient table")
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=_cmd_series, default_format="csv")

    p = sub.add_parser("verify", parents=[common],
                       help="grid-check one part of the comparison theorem")
    p.add_argument("--part", type=int, required=True, choices=range(1, 9))
    p.add_argument("--s", default=None, help="order grid override")
    p.add_argument("--t", default=None, help="coordinate grid override")
    p.set_defaults(func=_cmd_verify, default_format="json")

    p = sub.add_parser("moments", parents=[common],
                       help="third-moment bounds for a distribution")
    p.add_argument("--dist", required=True,
                   choices=("uniform", "two-point", "discrete", "constant"))
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=1.0)
    p.add_argument("--points", default=None, help="comma list of atoms")
    p.add_argument("--probs", default=None, help="comma list of probabilities")
    p.add_argument("--value", type=float, default=0.0,
                   help="the constant for --dist constant")
    p.add_argument("--draws", type=int, default=100_000)
    p.set_defaults(func=_cmd_moments, default_format="json")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except MeansError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:  # console script
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())

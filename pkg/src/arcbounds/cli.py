"""Command-line front end.

Verbs: eval, bounds, classify, minimize, verify, compare, scan.  Output is
a human table on a terminal and CSV when piped (override with --format).
CSV and JSON carry full binary64 round-trip precision; tables show six
significant digits.  Exit status: 0 success, 1 verification failure,
2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Sequence

import numpy as np

from . import explore, verify
from .analysis import find_minimum
from .errors import DomainError
from .family import arccos_stable, bound_arrays, bound_ratio, classify_regime
from .grids import SCAN_GRID, GridSpec
from .sharp import a_star_pair, best_lower, best_upper, carlson_pair, lambda_lower

__all__ = ["main", "emit_curve"]

CURVE_HEADER = (
    "x",
    "family_lower",
    "best_lower",
    "a_star_lower",
    "carlson_lower",
    "lambda_lower",
    "arccos",
    "a_star_upper",
    "carlson_upper",
    "best_upper",
    "family_upper",
)


def emit_curve(a: float, n: int, grid: str = "refined") -> tuple[tuple[str, ...], np.ndarray]:
    """Plot-ready sweep of every bound candidate plus the family pair at ``a``.

    Returns the column header and an (n, 11) array in strictly increasing x.
    """
    if n < 2:
        raise DomainError("curve needs n >= 2")
    x = GridSpec(1e-9, 1.0 - 1e-9, n, grid).points()
    fam_lo, fam_up = bound_arrays(a, x)
    astar_lo, astar_up = a_star_pair(x)
    carl_lo, carl_up = carlson_pair(x)
    cols = np.column_stack(
        [
            x,
            fam_lo,
            best_lower(x),
            astar_lo,
            carl_lo,
            lambda_lower(x),
            arccos_stable(x),
            astar_up,
            carl_up,
            best_upper(x),
            fam_up,
        ]
    )
    return CURVE_HEADER, cols


def _fmt(value, digits: int) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def _emit_rows(header: Sequence[str], rows: Iterable[Sequence], fmt: str, out) -> None:
    if fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
        return
    digits = 17 if fmt == "csv" else 6
    text_rows = [[_fmt(v, digits) for v in row] for row in rows]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(text_rows)
        return
    widths = [max(len(h), *(len(r[i]) for r in text_rows)) if text_rows else len(h) for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in text_rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _report_rows(reports) -> list[tuple]:
    return [(r.claim_id, r.passed, r.samples, r.worst_margin, r.worst_x, r.notes) for r in reports]


REPORT_HEADER = ("claim_id", "passed", "samples", "worst_margin", "worst_x", "notes")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcbounds", description="Elementary arccos bounds: evaluation, verification, scanning.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default=None, help="output format (default: table on a terminal, csv when piped)")
        p.add_argument("--out", default=None, help="write output to this file instead of stdout")

    p = sub.add_parser("eval", help="evaluate the family ratio at (a, x)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    add_common(p)

    p = sub.add_parser("bounds", help="emit (x, lower, arccos, upper) rows for one parameter")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--grid", choices=("uniform", "refined"), default="refined")
    p.add_argument("--full", action="store_true", help="emit every sharp bound candidate as extra columns")
    add_common(p)

    p = sub.add_parser("classify", help="monotonicity regime of the ratio for a parameter")
    p.add_argument("--a", type=float, required=True)
    add_common(p)

    p = sub.add_parser("minimize", help="locate the interior minimum (middle regime only)")
    p.add_argument("--a", type=float, required=True)
    add_common(p)

    p = sub.add_parser("verify", help="run claims from the verification registry")
    p.add_argument("--claims", default="all", help="comma-separated claim ids, or 'all'")
    p.add_argument("--list", action="store_true", help="list registry claim ids and exit")
    p.add_argument("--a", type=float, default=None, help="restrict parameterized claims to one a")
    p.add_argument("--n", type=int, default=None, help="override the per-claim default grids with one n-point grid")
    p.add_argument("--grid", choices=("uniform", "refined"), default="refined", help="spacing of the override grid (with --n)")
    add_common(p)

    p = sub.add_parser("compare", help="dominance table for the sharp bound candidates")
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--grid", choices=("uniform", "refined"), default="refined")
    add_common(p)

    p = sub.add_parser("scan", help="classify the generalized family over a parameter box")
    p.add_argument("--alpha", required=True, help="axis values: 'v', 'v1,v2,...', or 'lo:hi:count'")
    p.add_argument("--beta", required=True, help="axis values, same forms as --alpha")
    p.add_argument("--gamma", required=True, help="axis values, same forms as --alpha")
    p.add_argument("--n", type=int, default=SCAN_GRID.n, help="x-grid size per triple")
    p.add_argument("--grid", choices=("uniform", "refined"), default="uniform")
    add_common(p)

    return parser


def _parse_axis(text: str) -> list[float]:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"axis range must be lo:hi:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise DomainError("axis count must be >= 1")
        return [lo] if count == 1 else list(np.linspace(lo, hi, count))
    return [float(tok) for tok in text.split(",") if tok != ""]


def _run(args, out) -> int:
    fmt = args.format or ("table" if sys.stdout.isatty() and args.out is None else "csv")

    if args.verb == "eval":
        value = bound_ratio(args.a, args.x)
        _emit_rows(("a", "x", "value"), [(args.a, args.x, float(value))], fmt, out)
        return 0

    if args.verb == "bounds":
        if args.full:
            header, cols = emit_curve(args.a, args.n, args.grid)
            _emit_rows(header, cols.tolist(), fmt, out)
            return 0
        x = GridSpec(1e-9, 1.0 - 1e-9, args.n, args.grid).points()
        lower, upper = bound_arrays(args.a, x)
        rows = np.column_stack([x, lower, arccos_stable(x), upper]).tolist()
        _emit_rows(("x", "lower", "arccos", "upper"), rows, fmt, out)
        return 0

    if args.verb == "classify":
        regime = classify_regime(args.a)
        if fmt == "table":
            out.write(regime.value + "\n")
        else:
            _emit_rows(("a", "regime"), [(args.a, regime.value)], fmt, out)
        return 0

    if args.verb == "minimize":
        res = find_minimum(args.a)
        _emit_rows(
            ("a", "x0", "f_min", "residual", "iterations"),
            [(res.a, res.x0, res.f_min, res.residual, res.iterations)],
            fmt,
            out,
        )
        return 0

    if args.verb == "verify":
        if args.list:
            rows = [(c.claim_id, c.description) for c in verify.CLAIMS]
            _emit_rows(("claim_id", "description"), rows, fmt, out)
            return 0
        ids = None if args.claims.strip() == "all" else [t.strip() for t in args.claims.split(",") if t.strip()]
        grid = None
        if args.n is not None:
            grid = GridSpec(1e-9, 1.0 - 1e-9, args.n, args.grid)
        try:
            reports = verify.run_claims(ids, grid=grid, a=args.a)
        except KeyError as exc:
            raise DomainError(str(exc)) from exc
        if fmt == "json":
            out.write(verify.reports_to_json(reports) + "\n")
        else:
            _emit_rows(REPORT_HEADER, _report_rows(reports), fmt, out)
        return 0 if all(r.passed for r in reports) else 1

    if args.verb == "compare":
        result = verify.compare_bounds(GridSpec(1e-9, 1.0 - 1e-9, args.n, args.grid))
        if fmt == "json":
            payload = {
                "samples": result.samples,
                "reports": [r.to_dict() for r in result.reports],
                "crossovers": list(result.crossovers),
                "lower_argmax_counts": result.lower_argmax_counts,
                "upper_argmin_counts": result.upper_argmin_counts,
            }
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            _emit_rows(REPORT_HEADER, _report_rows(result.reports), fmt, out)
            if fmt == "table":
                out.write(f"crossovers: {', '.join(f'{c:.12g}' for c in result.crossovers)}\n")
                out.write(f"lower argmax counts: {result.lower_argmax_counts}\n")
                out.write(f"upper argmin counts: {result.upper_argmin_counts}\n")
        return 0 if all(r.passed for r in result.reports) else 1

    if args.verb == "scan":
        grid = GridSpec(1e-6, 1.0 - 1e-6, args.n, args.grid)
        results = explore.scan_grid(_parse_axis(args.alpha), _parse_axis(args.beta), _parse_axis(args.gamma), grid)
        if fmt == "json":
            out.write(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
        else:
            header = ("alpha", "beta", "gamma", "verdict", "evidence_x", "margin")
            rows = [(r.alpha, r.beta, r.gamma, r.verdict.value, r.evidence_x, r.margin) for r in results]
            _emit_rows(header, rows, fmt, out)
        return 0

    raise AssertionError(f"unhandled verb {args.verb!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.out is not None:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                return _run(args, fh)
        return _run(args, sys.stdout)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())

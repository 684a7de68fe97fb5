"""Command-line front end.

    pullback-lvalues tables --which 1 --k 12..22 [--format text|csv|json]
    pullback-lvalues alpha --k 12 [--route direct|pieces|both]
    pullback-lvalues verify --suite exact|numeric|all [--k 12]
    pullback-lvalues qexp --form delta --terms 5

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .bernoulli import load_bernoulli_cache, save_bernoulli_cache
from .exact import format_rational
from .qseries import DEFAULT_PRECISION

PRECISION_ENV = "PULLBACK_LVALUES_PRECISION"
K_MIN, K_MAX = 12, 100


class UsageError(Exception):
    pass


def parse_k(text: str, k_max: int | None = K_MAX) -> list[int]:
    """Parse ``12``, ``12,16`` or ``12..22``; ranges keep the even values only."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = (int(x) for x in part.split("..", 1))
                if lo > hi:
                    raise UsageError(f"empty range {part}")
                out.extend(k for k in range(lo, hi + 1) if k % 2 == 0)
            else:
                k = int(part)
                if k % 2:
                    raise UsageError(f"weight k must be even, got {k}")
                out.append(k)
    except ValueError:
        raise UsageError(f"cannot parse weight list {text!r}") from None
    for k in out:
        if k < K_MIN or (k_max is not None and k > k_max):
            raise UsageError(f"weight k must lie in [{K_MIN}, {k_max}], got {k}")
    if not out:
        raise UsageError(f"no even weights in {text!r}")
    return out


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{PRECISION_ENV} must be positive")
    return value


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _aligned(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def cmd_tables(args) -> int:
    from .special_values import emit_table1, emit_table2, table1_cells

    ks = parse_k(args.k)
    if args.which == 1:
        header = ["k", "H(k-1,3)", "H(k-1,4)"]
        rows = emit_table1(ks)
        if args.format == "json":
            print(json.dumps([dict(zip(header, table1_cells(r))) for r in rows], indent=2))
        elif args.format == "csv":
            print(_csv([header] + [table1_cells(r) for r in rows]))
        else:
            print(_aligned([header] + [table1_cells(r) for r in rows]))
        return 0
    rows = emit_table2(ks)
    if args.format == "json":
        print(json.dumps([{"k": r["k"], "alpha": r["alpha"].value.to_json(), "display": r["display"]} for r in rows], indent=2))
    elif args.format == "csv":
        print(_csv([["k", "coeff", "pi_exp", "alpha"]] + [
            [r["k"], format_rational(r["alpha"].value.coeff), r["alpha"].value.pi_exp, r["display"]] for r in rows
        ]))
    else:
        print(_aligned([["k", "alpha_k"]] + [[str(r["k"]), r["display"]] for r in rows]))
    return 0


def cmd_alpha(args) -> int:
    from .special_values import alpha_direct, alpha_from_pieces, render_pi_monomial

    status = 0
    records = []
    for k in parse_k(args.k, k_max=None):
        rec = {"k": k}
        if args.route in ("direct", "both"):
            rec["direct"] = alpha_direct(k).value
        if args.route in ("pieces", "both"):
            rec["pieces"] = alpha_from_pieces(k).value
        if args.route == "both":
            rec["equal"] = rec["direct"] == rec["pieces"]
            if not rec["equal"]:
                status = 1
        records.append(rec)

    routes = [r for r in ("direct", "pieces") if r in records[0]]
    if args.format == "json":
        print(json.dumps([
            {key: (val.to_json() if key in routes else val) for key, val in rec.items()} for rec in records
        ], indent=2))
    elif args.format == "csv":
        header = ["k"] + routes + (["verdict"] if args.route == "both" else [])
        body = []
        for rec in records:
            row = [rec["k"]] + [render_pi_monomial(rec[r]) for r in routes]
            if args.route == "both":
                row.append("EQUAL" if rec["equal"] else "UNEQUAL")
            body.append(row)
        print(_csv([header] + body))
    else:
        for rec in records:
            parts = [f"{r}: {render_pi_monomial(rec[r])}" for r in routes]
            if args.route == "both":
                parts.append("EQUAL" if rec["equal"] else "UNEQUAL")
            print(f"k={rec['k']}  " + "  ".join(parts))
    return status


def cmd_verify(args) -> int:
    from . import checks

    k = parse_k(args.k, k_max=None)[0] if args.k else 12
    suites = {"exact": ["exact"], "numeric": ["numeric"], "all": ["exact", "numeric"]}[args.suite]
    results = []
    for name in suites:
        print(f"== {name} suite ==")
        if name == "exact":
            it = checks.exact_suite()
        else:
            from .qseries import dim_cusp_forms

            if dim_cusp_forms(k) > 1:
                raise UsageError(f"the numeric suite needs dim S_k <= 1, and dim S_{k} = {dim_cusp_forms(k)}")
            it = checks.guarded("numeric", checks.numeric_suite(k))
        for check in it:
            print(check.line())
            results.append(check)
        if name == "numeric" and args.report:
            from .numeric import theorem_check_num

            print(json.dumps(theorem_check_num(k).to_json(), indent=2))
    failed = sum(not c.passed for c in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


_FORMS = ("eisenstein", "delta", "theta1", "theta2", "miller")


def cmd_qexp(args) -> int:
    from .qseries import delta_qexp, eisenstein_qexp, miller_basis, theta_qexp

    N = args.terms if args.terms is not None else _default_precision()
    if N < 1:
        raise UsageError("--terms must be positive")
    if args.form in ("eisenstein", "miller") and args.k is None:
        raise UsageError(f"--form {args.form} needs --k")
    try:
        if args.form == "miller":
            k = parse_k(args.k, k_max=None)[0]
        elif args.form == "eisenstein":
            k = int(args.k)
        if args.form == "eisenstein":
            series = eisenstein_qexp(k, N)
        elif args.form == "delta":
            series = delta_qexp(max(N, 2)).truncate(N)
        elif args.form in ("theta1", "theta2"):
            series = theta_qexp(int(args.form[-1]), N)
        else:
            basis = miller_basis(k, max(N, 16))
            if not 0 <= args.index < len(basis):
                raise UsageError(f"--index must lie in [0, {len(basis) - 1}] for k={k}")
            series = basis[args.index].truncate(N)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(series.to_json()))
    elif args.format == "csv":
        print(_csv([["n", "coeff"]] + [[n, format_rational(c)] for n, c in enumerate(series.coeffs)]))
    else:
        print(", ".join(format_rational(c) for c in series.coeffs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pullback-lvalues",
        description="Class numbers, Siegel Eisenstein coefficients and weighted L-value averages.",
    )
    parser.add_argument("--cache", type=Path, help="JSON file memoizing Bernoulli numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("tables", help="class number table (1) or alpha_k table (2)")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.add_argument("--k", default="12..22", help="even weights: 12, 12,16 or 12..22")
    fmt(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("alpha", help="exact alpha_k")
    p.add_argument("--k", required=True)
    p.add_argument("--route", choices=("direct", "pieces", "both"), default="direct")
    fmt(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("exact", "numeric", "all"), default="exact")
    p.add_argument("--k", help="weight for the numeric suite (default 12)")
    p.add_argument("--report", action="store_true", help="also print the JSON report of the numeric check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qexp", help="q-expansion coefficients")
    p.add_argument("--form", choices=_FORMS, required=True)
    p.add_argument("--k", help="weight for eisenstein and miller")
    p.add_argument("--index", type=int, default=0, help="basis element for miller")
    p.add_argument("--terms", type=int, help=f"number of coefficients (default ${PRECISION_ENV} or {DEFAULT_PRECISION})")
    fmt(p)
    p.set_defaults(func=cmd_qexp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cache is not None and args.cache.exists():
            try:
                load_bernoulli_cache(args.cache)
            except (OSError, ValueError) as exc:
                raise UsageError(f"cannot read cache {args.cache}: {exc}") from None
        status = args.func(args)
        if args.cache is not None:
            save_bernoulli_cache(args.cache)
        return status
    except UsageError as exc:
        print(f"pullback-lvalues: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

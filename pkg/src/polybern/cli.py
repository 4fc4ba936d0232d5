"""Command line frontend: tables, polynomials, identity checks, eval.

Exit codes: 0 success (identity passed), 1 identity/equation failed,
2 usage, parse or evaluation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import families, identities, parser as expr
from .errors import PolybernError
from .identities import IdentityReport, Witness
from .ring import format_scalar, lambda_eval

DEFAULT_ORDER = families.DEFAULT_PRECISION


@dataclass(frozen=True)
class OutputRecord:
    """One table or eval result; rows are (n, value) or (n, coeff, n!*coeff)."""

    family: str | None
    expr: str | None
    k: int | None
    r: int
    lam: str
    rows: tuple

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "expr": self.expr,
            "k": self.k,
            "r": self.r,
            "lambda": self.lam,
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> OutputRecord:
        return cls(d["family"], d["expr"], d["k"], d["r"], d["lambda"],
                   tuple(tuple(row) for row in d["rows"]))


def _columns(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for cells in [header] + rows:
        padded = [cells[0].rjust(widths[0])]
        padded += [c.ljust(widths[i]) for i, c in enumerate(cells) if i > 0]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(d: dict) -> str:
    return json.dumps(d) + "\n"


def render_record(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return _json_text(record.to_json_dict())
    if record.expr is None:
        header = ["n", "value"]
        rows = [[str(n), v] for n, v in record.rows]
    else:
        header = ["n", "coefficient", "sequence"]
        rows = [[str(n), c, s] for n, c, s in record.rows]
    if fmt == "csv":
        return _csv_text(header, rows)
    return _columns(header, rows)


def render_report(report: IdentityReport, fmt: str) -> str:
    if fmt == "json":
        return _json_text(report.to_json_dict())
    w = report.witness
    if fmt == "csv":
        row = [report.id, report.status]
        row += ["", "", ""] if w is None else [str(w.n), w.lhs, w.rhs]
        return _csv_text(["id", "status", "n", "lhs", "rhs"], [row])
    if w is None:
        return f"{report.id}: pass\n"
    return (f"{report.id}: fail at n={w.n}\n"
            f"  lhs = {w.lhs}\n"
            f"  rhs = {w.rhs}\n")


def _lambda_mode(text: str):
    """argparse type for --lambda: 'symbolic' or an exact rational."""
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected 'symbolic' or a rational like 3/5, got {text!r}")


def build_arg_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=None,
                        help="polylog order (any sign)")
    common.add_argument("--r", type=int, default=1,
                        help="family order (default 1)")
    common.add_argument("--n", type=int, default=None,
                        help="row count / index / identity range")
    common.add_argument("--order", type=int, default=None,
                        help=f"working precision (default {DEFAULT_ORDER})")
    common.add_argument("--lambda", dest="lam", type=_lambda_mode, default=None,
                        metavar="RAT|symbolic",
                        help="specialize lambda to an exact rational (default symbolic)")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"),
                        default="text", help="output format (default text)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized check inputs (default 0)")

    top = argparse.ArgumentParser(
        prog="polybern",
        description="Exact degenerate poly-Bernoulli tables, polynomials and "
                    "identity verification over Q[lambda].")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="print n!*[t^n] values of a family")
    p.add_argument("family", choices=families.FAMILY_IDS)

    p = sub.add_parser("poly", parents=[common],
                       help="print the polynomial in x of a family")
    p.add_argument("family", choices=families.FAMILY_IDS)

    p = sub.add_parser("verify", parents=[common],
                       help="check a catalog identity or an 'lhs == rhs' equation")
    p.add_argument("target")

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a series expression")
    p.add_argument("expression")

    return top


def _lam_label(lam) -> str:
    return "symbolic" if lam is None else format_scalar(lam)


def _specialized_str(value, lam) -> str:
    if lam is not None:
        value = lambda_eval(value, lam)
    return format_scalar(value)


def cmd_table(args) -> int:
    order = args.order if args.order is not None else DEFAULT_ORDER
    if args.n is None:
        raise PolybernError("table needs --n (number of rows)")
    if args.n < 1:
        raise PolybernError("--n must be >= 1")
    if args.n > order:
        raise PolybernError(f"--n {args.n} exceeds the working precision {order}")
    tbl = families.table(args.family, args.n, k=args.k, r=args.r)
    rows = tuple((n, _specialized_str(v, args.lam)) for n, v in tbl.rows())
    record = OutputRecord(args.family, None, tbl.k, tbl.r, _lam_label(args.lam), rows)
    sys.stdout.write(render_record(record, args.fmt))
    return 0


def cmd_poly(args) -> int:
    order = args.order if args.order is not None else DEFAULT_ORDER
    if args.n is None:
        raise PolybernError("poly needs --n (polynomial index)")
    if args.n < 0 or args.n >= order:
        raise PolybernError(f"--n must satisfy 0 <= n < {order}")
    if args.family == "daehee":
        raise PolybernError("family 'daehee' has no polynomial form")
    p = families.polynomial(args.family, args.n, args.n + 1, k=args.k, r=args.r)
    if args.lam is not None:
        p = p.specialize(args.lam)
    d = {
        "family": args.family,
        "k": args.k,
        "r": args.r,
        "n": args.n,
        "lambda": _lam_label(args.lam),
        "poly": str(p),
    }
    if args.fmt == "json":
        sys.stdout.write(_json_text(d))
    elif args.fmt == "csv":
        rows = [[str(j), format_scalar(p.coefficient(j))] for j in range(args.n + 1)]
        sys.stdout.write(_csv_text(["degree", "coefficient"], rows))
    else:
        sys.stdout.write(str(p) + "\n")
    return 0


def _verify_equation(args) -> IdentityReport:
    lhs_text, _, rhs_text = args.target.partition("==")
    if "==" in rhs_text:
        raise PolybernError("an equation has exactly one '=='")
    order = args.order if args.order is not None else DEFAULT_ORDER
    lhs = expr.eval_expr(expr.parse(lhs_text), order)
    rhs = expr.eval_expr(expr.parse(rhs_text), order)
    witness = None
    for n in range(order):
        a, b = lhs[n], rhs[n]
        if args.lam is not None:
            a, b = lambda_eval(a, args.lam), lambda_eval(b, args.lam)
        if a != b:
            witness = Witness(n, format_scalar(a), format_scalar(b))
            break
    params = {"order": order, "lambda": _lam_label(args.lam)}
    status = "pass" if witness is None else "fail"
    return IdentityReport(args.target, params, status, witness)


def cmd_verify(args) -> int:
    if "==" in args.target:
        report = _verify_equation(args)
    else:
        report = identities.verify(
            args.target, k=args.k, r=args.r, nmax=args.n,
            order=args.order, lam=args.lam, seed=args.seed)
    sys.stdout.write(render_report(report, args.fmt))
    return 0 if report.passed else 1


def cmd_eval(args) -> int:
    order = args.order if args.order is not None else DEFAULT_ORDER
    series = expr.eval_expr(expr.parse(args.expression), order)
    if args.lam is not None:
        series = series.specialize(args.lam)
    rows = tuple(
        (n, format_scalar(series[n]), format_scalar(factorial(n) * series[n]))
        for n in range(order)
    )
    record = OutputRecord(None, args.expression, args.k, args.r,
                          _lam_label(args.lam), rows)
    sys.stdout.write(render_record(record, args.fmt))
    return 0


def main(argv=None) -> int:
    top = build_arg_parser()
    args = top.parse_args(argv)
    handler = {"table": cmd_table, "poly": cmd_poly,
               "verify": cmd_verify, "eval": cmd_eval}[args.command]
    try:
        return handler(args)
    except PolybernError as err:
        span = getattr(err, "span", None)
        where = f" at offset {span[0]}..{span[1]}" if span else ""
        print(f"polybern: error{where}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    umbral eval EXPR N        print E[EXPR^N]
    umbral gf EXPR [N]        print the generating-function coefficients c_0..c_N
    umbral table CASE         tabulate a recurrence (integral, pascal, fibonacci, dyck)
    umbral verify SUITE       run a property suite (series, bell, umbra, sheffer, recurrences, all)

Shared flags: ``--order N`` (default 16), ``--format csv|json``, ``--out PATH``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import oracles, recurrences as R, verify
from .dsl import parse
from .errors import TooLarge, UmbralError
from .series import DEFAULT_ORDER, Poly, format_value
from .umbra import evaluate, expr_gf

CASES = ("integral", "pascal", "fibonacci", "dyck")


def parse_range(text):
    """``"A..B"`` or ``"B"`` (meaning ``0..B``) to an inclusive ``range``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo, hi = 0, int(text)
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(lo, hi + 1)


def _json_value(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, Poly):
        return str(v)
    return v


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (Fraction, Poly)):
        return format_value(v)
    return str(v)


def table_rows(case, n_range, m_range=None, order=DEFAULT_ORDER, diagonal=False):
    """Rows of dicts in lexicographic order of their indices."""
    if n_range.stop - 1 > order:
        raise TooLarge(f"n up to {n_range.stop - 1} exceeds the truncation order {order}")
    rows = []
    if case == "dyck":
        m_range = m_range if m_range is not None else range(0, 7)
        for n in n_range:
            for m in m_range:
                if n <= m:
                    rows.append({"case": case, "n": n, "m": m, "value": R.dyck_count(n, m, order)})
    elif case == "integral":
        for n in n_range:
            q = R.solve_integral_case(n, order)
            rows.append({"case": case, "n": n, "value": q, "integral_is_one": oracles.integrate01(q) == 1})
    elif case == "pascal":
        for n in n_range:
            rows.append({"case": case, "n": n, "value": R.solve_pascal_case(n, order)})
    elif case == "fibonacci":
        for n in n_range:
            g = R.solve_fibonacci_case(n, order)
            rows.append({"case": case, "n": n, "value": g(0) if diagonal else g})
    else:
        raise ValueError(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    return rows


def render_table(rows, fmt):
    if fmt == "json":
        return json.dumps([{k: _json_value(v) for k, v in r.items()} for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    if rows:
        header = [k for k in rows[0] if k != "case"]
    else:
        header = ["n", "value"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in rows:
        writer.writerow([_csv_value(r[k]) for k in header])
    return buf.getvalue()


def render_report(checks, fmt):
    if fmt == "json":
        failed = sum(c.failed for c in checks)
        payload = {"ok": not failed, "failed": failed, "checks": [c.as_dict() for c in checks]}
        return json.dumps(payload, indent=1) + "\n"
    lines = []
    for c in checks:
        tag = {"pass": "PASS", "fail": "FAIL", "reported": "NOTE"}[c.status]
        line = f"[{tag}] {c.suite}: {c.name}"
        if c.detail:
            line += f" -- {c.detail}"
        lines.append(line)
    failed = sum(c.failed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed" if not failed
                 else f"{failed} of {len(checks)} checks FAILED")
    return "\n".join(lines) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order (default 16)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    p = argparse.ArgumentParser(prog="umbral", description="Exact umbral calculus toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate E[EXPR^N]")
    e.add_argument("expr")
    e.add_argument("n", type=int)

    g = sub.add_parser("gf", parents=[common], help="print generating-function coefficients")
    g.add_argument("expr")
    g.add_argument("n", type=int, nargs="?", help="number of coefficients after c_0 (overrides --order)")

    t = sub.add_parser("table", parents=[common], help="tabulate a recurrence solution")
    t.add_argument("case", choices=CASES)
    t.add_argument("--n", type=parse_range, default=None, help="range A..B of n (default 0..5)")
    t.add_argument("--m", type=parse_range, default=None, help="range A..B of m for dyck (default 0..6)")
    t.add_argument("--diagonal", action="store_true", help="fibonacci: print F_n(n) instead of F_n(x+n)")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            value = evaluate(parse(args.expr, args.order), args.n)
            _emit(format_value(value) + "\n", args.out)
        elif args.command == "gf":
            order = args.n if args.n is not None else args.order
            f = expr_gf(parse(args.expr, order), order)
            _emit(", ".join(format_value(c) for c in f.coeffs) + "\n", args.out)
        elif args.command == "table":
            n_range = args.n if args.n is not None else range(0, 6)
            rows = table_rows(args.case, n_range, args.m, args.order, args.diagonal)
            _emit(render_table(rows, args.format), args.out)
        elif args.command == "verify":
            checks = verify.run_suite(args.suite)
            _emit(render_report(checks, args.format), args.out)
            return 1 if any(c.failed for c in checks) else 0
    except (UmbralError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

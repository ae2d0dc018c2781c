"""Command-line front end: coefficient dumps, expansion tables, sweeps, psi.

Exit status is 0 only when everything that was checked holds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import hookpsi, identities
from .genbinom import expansion_method1, expansion_method2, genbinom_at, genbinom_symbolic
from .numeric import format_rational, rat, rational_to_json
from .polyalg import PolyT, PolyXT, binomial_latex, poly_to_text, to_binomial_basis
from .report import IdentityReport

FORMATS = ("json", "csv", "latex")
FORMAT_ENV = "TBINOM_FORMAT"


@dataclass
class RunConfig:
    command: str
    format: str = "json"
    k: int | None = None
    x_value: Fraction | None = None
    t_value: Fraction | None = None
    max_k: int | None = None
    max_n: int | None = None
    max_r: int | None = None
    order: int | None = None
    identity: str = "all"
    r: int | None = None
    s: int | None = None
    output_path: str | None = None

    def validate(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.command == "psi":
            if self.s not in (0, 1, 2):
                raise ValueError("--s must be 0, 1 or 2")
            if self.r is None or self.r < 1:
                raise ValueError("--r must be >= 1")
        if self.command == "coeff" and (self.k is None or self.k < 0):
            raise ValueError("--k must be >= 0")
        if self.command == "table" and (self.max_k is None or self.max_k < 1):
            raise ValueError("--max-k must be >= 1")
        if self.order is not None and self.max_k is not None and self.order < self.max_k:
            raise ValueError("--order must be >= --max-k")
        for name in ("max_k", "max_n", "max_r", "order"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")


def _rational_arg(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


# -- commands -------------------------------------------------------------------


def cmd_coeff(cfg: RunConfig) -> tuple[str, int]:
    value = genbinom_symbolic(cfg.k)
    if cfg.x_value is not None:
        value = genbinom_at(cfg.x_value, cfg.k)
        if cfg.t_value is not None:
            value = value(cfg.t_value)
    elif cfg.t_value is not None:
        value = value.eval_t(cfg.t_value)

    if isinstance(value, Fraction):
        if cfg.format == "json":
            return _dumps(rational_to_json(value)), 0
        if cfg.format == "csv":
            return _csv_text(["value"], [[format_rational(value)]]), 0
        return _latex_rational(value), 0

    if isinstance(value, PolyXT):
        expansion = to_binomial_basis(value)
        if cfg.format == "json":
            return _dumps(value.to_json()), 0
        if cfg.format == "csv":
            rows = [[i, poly_to_text(c.coeffs, "t")] for i, c in expansion.terms()]
            return _csv_text(["i", "coefficient"], rows), 0
        return binomial_latex(expansion), 0

    # PolyT, in t (x specialized) or in x (t specialized)
    if cfg.format == "json":
        return _dumps(value.to_json()), 0
    if cfg.format == "csv":
        rows = [[e, format_rational(c)] for e, c in enumerate(value.coeffs)]
        return _csv_text(["power", "coefficient"], rows), 0
    return value.latex(), 0


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def table_rows(max_k: int) -> list[dict]:
    rows = []
    for k in range(1, max_k + 1):
        m1 = expansion_method1(k)
        m2 = expansion_method2(k)
        for i in range(1, k + 1):
            a, b = m1.c(i), m2.c(i)
            rows.append({"k": k, "i": i, "method1": a, "method2": b, "agree": a == b})
    return rows


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    rows = table_rows(cfg.max_k)
    status = 0 if all(r["agree"] for r in rows) else 1
    if cfg.format == "json":
        lines = [
            _dumps({
                "k": str(r["k"]),
                "i": str(r["i"]),
                "method1": r["method1"].to_json(),
                "method2": r["method2"].to_json(),
                "agree": r["agree"],
            })
            for r in rows
        ]
        return "\n".join(lines), status
    if cfg.format == "csv":
        body = [
            [r["k"], r["i"], str(r["method1"]), str(r["method2"]), str(r["agree"]).lower()]
            for r in rows
        ]
        return _csv_text(["k", "i", "method1", "method2", "agree"], body), status
    out = ["\\begin{tabular}{rrllc}", "$k$ & $i$ & method 1 & method 2 & agree \\\\", "\\hline"]
    for r in rows:
        mark = "\\checkmark" if r["agree"] else "$\\times$"
        out.append(
            f"{r['k']} & {r['i']} & ${r['method1'].latex()}$ & ${r['method2'].latex()}$ & {mark} \\\\"
        )
    out.append("\\end{tabular}")
    return "\n".join(out), status


def _reports_text(reports: Sequence[IdentityReport], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(r.to_json_line() for r in reports)
    if fmt == "csv":
        rows = [
            [r.identity_id, _dumps({k: str(v) for k, v in r.parameters.items()}),
             str(r.holds).lower()]
            for r in reports
        ]
        return _csv_text(["identity_id", "parameters", "holds"], rows)
    lines = []
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
        lines.append(f"% {r.identity_id} ({params}): {'holds' if r.holds else 'FAILS'}")
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    reports = identities.run_sweep(
        cfg.identity, order=cfg.order, max_k=cfg.max_k, max_n=cfg.max_n, max_r=cfg.max_r
    )
    status = 0 if all(r.holds for r in reports) else 1
    return _reports_text(reports, cfg.format), status


def psi_checks(r: int, s: int) -> list[IdentityReport]:
    """The equation that involves psi_{r,1^s}, its initial value and its t = 1 form."""
    system = (hookpsi.verify_system_s0, hookpsi.verify_system_s1, hookpsi.verify_system_s2)[s]
    return [system(r), hookpsi.verify_initial_condition(r, s), hookpsi.verify_t1(r, s)]


def cmd_psi(cfg: RunConfig) -> tuple[str, int]:
    sol = hookpsi.hook_solution(cfg.r, cfg.s)
    checks = psi_checks(cfg.r, cfg.s)
    status = 0 if all(c.holds for c in checks) else 1
    if cfg.format == "json":
        return _dumps({"solution": sol.to_json(), "checks": [c.to_json() for c in checks]}), status
    if cfg.format == "csv":
        rows = [[e, poly_to_text(c.coeffs, "t")] for e, c in sorted(sol.body.terms.items())]
        head = f"# scale={format_rational(sol.scale)}"
        return head + "\n" + _csv_text(["exponent", "coefficient"], rows), status
    return sol.latex() + "\n" + _reports_text(checks, "latex"), status


COMMANDS = {"coeff": cmd_coeff, "table": cmd_table, "verify": cmd_verify, "psi": cmd_psi}


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=default_fmt,
                        help=f"output format (default from ${FORMAT_ENV}, else json)")
    common.add_argument("--output", dest="output_path", metavar="PATH",
                        help="write to PATH instead of standard output")

    parser = argparse.ArgumentParser(prog="tbinom", description="Generalized binomial coefficients <x, k>.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", parents=[common], help="print <x, k> or a specialization")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", dest="x_value", type=_rational_arg)
    p.add_argument("--t", dest="t_value", type=_rational_arg)

    p = sub.add_parser("table", parents=[common], help="binomial-basis coefficients by both methods")
    p.add_argument("--max-k", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--identity", default="all")
    p.add_argument("--order", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-r", type=int)

    p = sub.add_parser("psi", parents=[common], help="hook solution psi_{r,1^s} with its checks")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, choices=(0, 1, 2), default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in FORMATS:
        parser.error(f"${FORMAT_ENV} holds unknown format {args.format!r}")
    cfg = RunConfig(**vars(args))
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))
    try:
        text, status = COMMANDS[cfg.command](cfg)
    except identities.UnknownIdentity as exc:
        known = ", ".join(identities.IDENTITY_IDS)
        print(f"tbinom: unknown identity {exc.args[0]!r}; known: all, {known}", file=sys.stderr)
        return 2
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())

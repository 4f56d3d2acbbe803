"""Command-line entry point: ``logint {eval,oracle,verify,table}``.

Exit codes: 0 success, 1 failed verification, 2 usage or domain error,
3 quadrature did not converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import closedform as cf
from .quadrature import ORACLE_NAMES, QuadConfig, oracle
from .verify import SUITES, checks_for, run_checks

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2, 3
TOL_RANGE = (1e-14, 1e-4)
TOL_ENV = "LOGINT_DEFAULT_TOL"


class UsageError(Exception):
    pass


class NonConvergence(Exception):
    pass


def _num(x: float) -> str:
    return f"{x:.17g}"


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return QuadConfig().abs_tol
    try:
        return _check_tol(float(raw))
    except ValueError:
        raise UsageError(f"{TOL_ENV}={raw!r} is not a decimal number") from None


def _check_tol(tol: float) -> float:
    lo, hi = TOL_RANGE
    if not lo <= tol <= hi:
        raise UsageError(f"tolerance {tol:g} outside [{lo:g}, {hi:g}]")
    return tol


def _config(tol: float | None) -> QuadConfig:
    tol = _default_tol() if tol is None else _check_tol(tol)
    return QuadConfig(abs_tol=tol, rel_tol=tol)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- eval -------------------------------------------------------------------

def _need(value, flag: str, kind: str):
    if value is None:
        raise UsageError(f"eval {kind} requires {flag}")
    return value


def evaluate(kind: str, m=None, b=None, q=None) -> tuple[dict, cf.ClosedForm]:
    if kind in ("j", "i", "jrecip"):
        m = _need(m, "--m", kind)
        fn = {"j": cf.j_odd, "i": cf.i_odd, "jrecip": cf.j_recip_odd}[kind]
        return {"m": m}, fn(m)
    if kind == "jeven":
        b = _need(b, "--b", kind)
        return {"b": b}, cf.j_even(b)
    q = _need(q, "--q", kind)
    fn = cf.lemma2_integral if kind == "lemma2" else cf.lemma3_integral
    return {"q": q}, fn(q)


def cmd_eval(args) -> int:
    params, result = evaluate(args.kind, args.m, args.b, args.q)
    if args.json:
        doc = {"kind": args.kind, "params": params, "value": result.value, "terms": result.terms.render()}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = f"value: {_num(result.value)}\nterms: {result.terms.render()}\n"
    _emit(text, args.out)
    return EXIT_OK


# --- oracle -----------------------------------------------------------------

def cmd_oracle(args) -> int:
    cfg = _config(args.tol)
    params = {
        k: getattr(args, k)
        for k in ("x", "m", "q", "u", "v", "family", "alpha", "beta", "domain")
        if getattr(args, k) is not None
    }
    res = oracle(args.name, params, cfg)
    if args.json:
        doc = {
            "name": args.name.upper(),
            "params": params,
            "value": res.value if res.value == res.value else None,
            "err_estimate": res.err_estimate if res.err_estimate != float("inf") else None,
            "evaluations": res.evaluations,
            "converged": res.converged,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = (
            f"value: {_num(res.value)}\n"
            f"err_estimate: {res.err_estimate:.3e}\n"
            f"evaluations: {res.evaluations}\n"
            f"converged: {'yes' if res.converged else 'no'}\n"
        )
    _emit(text, args.out)
    return EXIT_OK if res.converged else EXIT_NOCONV


# --- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    reports = run_checks(checks_for(args.suite), parallel=args.parallel)
    failed = sum(not r.passed for r in reports)
    summary = f"{len(reports) - failed} passed / {failed} failed"
    if args.json:
        text = json.dumps([r.to_json() for r in reports], indent=2) + "\n"
        _emit(text, args.out)
        print(summary, file=sys.stderr)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.check_id} closed_form={_num(r.closed_form)} "
            f"oracle={_num(r.oracle)} abs_err={r.abs_err:.3e} tol={r.tolerance:.1e}"
            for r in reports
        ]
        lines.append(summary)
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILED if failed else EXIT_OK


# --- table ------------------------------------------------------------------

def table_rows(kind: str, m_max: int, cfg: QuadConfig | None = None) -> list[dict]:
    if m_max < 1 or m_max > 199 or m_max % 2 == 0:
        raise UsageError(f"--m-max must be odd and in [1, 199], got {m_max}")
    closed = cf.j_odd if kind == "j" else cf.i_odd
    name = "J" if kind == "j" else "I"
    rows = []
    for m in range(1, m_max + 1, 2):
        value = closed(m).value
        res = oracle(name, {"x": m}, cfg)
        if not res.converged:
            raise NonConvergence(f"{name}(m={m}) quadrature did not converge")
        rows.append({"m": m, "closed_form": value, "oracle": res.value, "abs_err": abs(value - res.value)})
    return rows


def cmd_table(args) -> int:
    rows = table_rows(args.kind, args.m_max, _config(args.tol))
    fields = ["m", "closed_form", "oracle", "abs_err"]
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for r in rows:
            writer.writerow([r["m"], _num(r["closed_form"]), _num(r["oracle"]), f"{r['abs_err']:.3e}"])
        text = buf.getvalue()
    else:
        lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
        for r in rows:
            lines.append(
                f"| {r['m']} | {_num(r['closed_form'])} | {_num(r['oracle'])} | {r['abs_err']:.3e} |"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logint",
        description="Closed forms of int_0^1 log(x^m+1)/(x+1) dx and int_0^1 log(x^m+1)/(x^2+1) dx, "
        "checked against double-exponential quadrature.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a closed form")
    p.add_argument("kind", choices=["j", "i", "jrecip", "jeven", "lemma2", "lemma3"])
    p.add_argument("--m", type=int, help="odd exponent for j, i, jrecip")
    p.add_argument("--b", type=int, help="half the even exponent for jeven")
    p.add_argument("--q", type=float, help="parameter for lemma2/lemma3")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", help="evaluate a cataloged integral by quadrature")
    p.add_argument("--name", required=True, type=str.upper, choices=ORACLE_NAMES)
    for flag in ("x", "m", "q", "u", "v", "alpha", "beta"):
        p.add_argument(f"--{flag}", type=float)
    p.add_argument("--family", help="phi family for PHI_CASE")
    p.add_argument("--domain", choices=["UNIT", "HALFLINE"], type=str.upper)
    p.add_argument("--tol", type=float, help=f"absolute and relative tolerance (default ${TOL_ENV} or 1e-12)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", action="store_true", help="run checks on a thread pool")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed form vs quadrature for odd m")
    p.add_argument("kind", choices=["j", "i"])
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    p.add_argument("--tol", type=float)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonConvergence as exc:
        print(f"logint: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (UsageError, ValueError, TypeError) as exc:
        print(f"logint: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

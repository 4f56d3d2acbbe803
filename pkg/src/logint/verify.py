"""Catalog of verification checks run by ``logint verify``.

Each check compares a closed-form (or left-hand-side) value with an
independently computed reference and produces a :class:`Report`.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from . import closedform as cf
from . import funceq as fe
from . import specfun as sf
from .quadrature import QuadConfig, dilog_kernel, integrate_halfline, integrate_unit, oracle

SUITES = ("specfun", "closedform", "funceq", "all")

LOG2_SQ = sf.LOG2**2
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Report:
    check_id: str
    closed_form: float
    oracle: float
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    wall_time_ms: float = 0.0

    @classmethod
    def build(cls, check_id: str, closed_form: float, reference: float, tolerance: float,
              wall_time_ms: float = 0.0) -> Report:
        abs_err = abs(closed_form - reference)
        if reference != 0:
            rel_err = abs_err / abs(reference)
        else:
            rel_err = 0.0 if abs_err == 0 else math.inf
        passed = abs_err <= tolerance or rel_err <= tolerance
        return cls(check_id, closed_form, reference, abs_err, rel_err, tolerance, passed, wall_time_ms)

    def to_json(self) -> dict:
        def num(v):
            return v if math.isfinite(v) else None

        return {
            "check_id": self.check_id,
            "closed_form": num(self.closed_form),
            "oracle": num(self.oracle),
            "abs_err": num(self.abs_err),
            "rel_err": num(self.rel_err),
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Check:
    check_id: str
    # returns (closed_form, reference) or (closed_form, reference, tolerance)
    compute: Callable[[], tuple]
    tolerance: float

    def run(self) -> Report:
        start = time.perf_counter()
        tol = self.tolerance
        try:
            out = self.compute()
            lhs, ref = out[0], out[1]
            if len(out) > 2:
                tol = out[2]
        except (ArithmeticError, ValueError, fe.QuadratureError):
            lhs, ref = math.nan, math.nan
        elapsed = 1000.0 * (time.perf_counter() - start)
        return Report.build(self.check_id, lhs, ref, tol, elapsed)


def _quad(name: str, **params) -> float:
    res = oracle(name, params)
    if not res.converged:
        raise fe.QuadratureError(name, res)
    return res.value


def _fmt(x: float) -> str:
    return f"{x:.6g}"


# --- reference implementations kept independent of specfun's reductions -----

def li2_direct(x: float, tol: float = 1e-20, max_terms: int = 100_000) -> float:
    """Plain power series of Li2, no argument reduction (|x| < 1)."""
    total, power = 0.0, 1.0
    for k in range(1, max_terms):
        power *= x
        term = power / (k * k)
        total += term
        if abs(term) < tol:
            break
    return total


def ti2_direct(x: float, n_terms: int = 200) -> float:
    """Plain alternating series of Ti2 with a fixed number of terms (|x| <= 1/2)."""
    return math.fsum((-1) ** k * x ** (2 * k + 1) / (2 * k + 1) ** 2 for k in range(n_terms))


# --- suites -----------------------------------------------------------------

TI2_INVERSION_GRID = (0.3, 0.5, 1, 2, 3, 5, 7, 10, 25, 50)


def specfun_checks() -> Iterator[Check]:
    yield Check("li2-at-1", lambda: (sf.li2(1.0), math.pi**2 / 6), 1e-15)
    yield Check("li2-at-minus-1", lambda: (sf.li2(-1.0), -math.pi**2 / 12), 1e-13)
    yield Check("li2-at-0.75", lambda: (sf.li2(0.75), li2_direct(0.75)), 1e-13)
    for x in (0.1, 0.3, 0.5, 0.7, 0.9):
        yield Check(
            f"li2-reflection-x={_fmt(x)}",
            lambda x=x: (sf.li2(x) + sf.li2(1 - x), math.pi**2 / 6 - math.log(x) * math.log1p(-x)),
            1e-12,
        )
    for x in (-0.9, -0.5, -0.2, 0.3, 0.6, 0.9):
        yield Check(
            f"li2-landen-x={_fmt(x)}",
            lambda x=x: (sf.li2(x) + sf.li2(x / (x - 1)), -0.5 * math.log1p(-x) ** 2),
            1e-12,
        )
    for x in (-0.5, -0.25, 0.1, 0.25, 0.5):
        yield Check(f"li2-series-x={_fmt(x)}", lambda x=x: (sf.li2(x), li2_direct(x)), 1e-13)
    for x in TI2_INVERSION_GRID:
        yield Check(
            f"ti2-inversion-x={_fmt(x)}",
            lambda x=x: (sf.ti2(x) - sf.ti2(1 / x), 0.5 * math.pi * math.log(x)),
            1e-12,
        )
    for x in (0.1, 0.25, 0.5):
        yield Check(f"ti2-series-x={_fmt(x)}", lambda x=x: (sf.ti2(x), ti2_direct(x)), 1e-13)
    for x in (0.3, 0.8, 2.5):
        yield Check(f"ti2-odd-x={_fmt(x)}", lambda x=x: (sf.ti2(-x), -sf.ti2(x)), 0.0)
    yield Check("ti2-at-1-catalan", lambda: (sf._ti2_euler(1.0), sf.CATALAN), 1e-13)
    yield Check(
        "ti2-2-minus-sqrt3",
        lambda: (sf.ti2(2 - SQRT3), 2 * sf.CATALAN / 3 - math.pi / 12 * math.log(2 + SQRT3)),
        1e-12,
    )
    yield Check(
        "ti2-2-plus-sqrt3",
        # 362 - 209 sqrt 3 = 1/(362 + 209 sqrt 3); the conjugate avoids cancellation
        lambda: (sf.ti2(2 + SQRT3), 2 * sf.CATALAN / 3 + math.pi / 12 * math.log(362 + 209 * SQRT3)),
        1e-12,
    )


X_REFLECTION_GRID = (0.1, 1 / 3, 0.5, 1.0, 2.0, 3.0, 10.0)
LEMMA2_GRID = (0.0, 0.1, 0.5, 1.0, 2.0, 3.0, 10.0, 100.0)
LEMMA3_GRID = (1e-4, 0.5, 1.0, 3.0, 10.0, 1e4)


def _honesty(check_id: str, result_fn, exact: float) -> Check:
    # passes iff the true error is within 10x the reported estimate
    def compute():
        res = result_fn()
        return res.value, exact, 10 * res.err_estimate

    return Check(check_id, compute, math.nan)


def honesty_checks() -> Iterator[Check]:
    cfg = QuadConfig()
    unit = {
        "const": (lambda t: 1.0, 1.0),
        "log1p-over-1p": (lambda t: math.log1p(t) / (1 + t), 0.5 * LOG2_SQ),
        "log-1m": (lambda t: math.log1p(-t), -1.0),
        "log": (math.log, -1.0),
        "inv-sqrt": (lambda t: 1 / math.sqrt(t), 2.0),
    }
    for name, (f, exact) in unit.items():
        yield _honesty(f"quad-honesty-unit-{name}", lambda f=f: integrate_unit(f, cfg), exact)
    half = {
        "inv-1p-sq": (lambda t: 1 / (1 + t * t), math.pi / 2),
        "atan-over-1p-sq": (lambda t: math.atan(t) / (1 + t * t), math.pi**2 / 8),
        "log-q4": (lambda t: math.log(t * t + 4) / (t * t + 1), math.pi * math.log(3)),
    }
    for name, (f, exact) in half.items():
        yield _honesty(f"quad-honesty-half-{name}", lambda f=f: integrate_halfline(f, cfg), exact)
    catalog = {
        "J-x=1": (("J", {"x": 1}), 0.5 * LOG2_SQ),
        "T-x=1": (("T", {"x": 1}), math.pi**2 / 32),
        "I-m=1": (("I", {"m": 1}), math.pi / 8 * sf.LOG2),
        "LEMMA3-q=1": (("LEMMA3", {"q": 1}), math.pi / 2 * sf.LOG2 - sf.CATALAN),
        "LEMMA2-q=0": (("LEMMA2", {"q": 0}), -math.pi**2 / 6),
        "HZN-x=1-u=-1-v=-1": (("HZN", {"x": 1, "u": -1, "v": -1}), -0.5 * LOG2_SQ),
    }
    for name, ((oname, params), exact) in catalog.items():
        yield _honesty(f"quad-honesty-{name}", lambda o=oname, p=params: oracle(o, p, cfg), exact)


def closedform_checks() -> Iterator[Check]:
    for m in range(1, 50, 2):
        yield Check(f"j-odd-m={m}", lambda m=m: (cf.j_odd(m).value, _quad("J", x=m)), 1e-10)
        yield Check(f"i-odd-m={m}", lambda m=m: (cf.i_odd(m).value, _quad("I", m=m)), 1e-10)
        yield Check(
            f"j-intermediate-m={m}", lambda m=m: (cf.j_odd_intermediate(m), cf.j_odd(m).value), 1e-13
        )
    for m in range(1, 100, 2):
        yield Check(
            f"j-reflection-m={m}",
            lambda m=m: (cf.j_odd(m).value + cf.j_recip_odd(m).value, LOG2_SQ),
            1e-13,
        )
    yield Check(
        "j-odd-m=3-example",
        lambda: (cf.j_odd(3).value, 0.5 * sf.li2(0.75) + 1.5 * LOG2_SQ - math.pi**2 / 9),
        1e-13,
    )
    yield Check("i-m=3-prior-form", lambda: (cf.i_odd(3).value, cf.i3_prior_form().value), 1e-13)
    yield Check("i-m=3-expanded-form", lambda: (cf.i_odd(3).value, cf.i3_expanded_form().value), 1e-13)
    yield Check(
        "i-m=3-forms-pairwise",
        lambda: (cf.i3_expanded_form().value, cf.i3_prior_form().value),
        1e-13,
    )
    for b in range(1, 21):
        yield Check(f"j-even-b={b}", lambda b=b: (cf.j_even(b).value, _quad("J", x=2 * b)), 1e-10)
    yield Check("j-even-b=1-lemma2", lambda: (cf.j_even(1).value, cf.lemma2_integral(1).value), 1e-13)
    for q in LEMMA2_GRID:
        yield Check(
            f"lemma2-q={_fmt(q)}", lambda q=q: (cf.lemma2_integral(q).value, _quad("LEMMA2", q=q)), 1e-10
        )
    yield Check("lemma2-q=0-limit", lambda: (cf.lemma2_integral(0).value, -math.pi**2 / 6), 1e-13)
    for q in LEMMA3_GRID:
        yield Check(
            f"lemma3-q={_fmt(q)}", lambda q=q: (cf.lemma3_integral(q).value, _quad("LEMMA3", q=q)), 1e-10
        )
    yield Check(
        "lemma3-q=1-value",
        lambda: (cf.lemma3_integral(1).value, math.pi / 2 * sf.LOG2 - sf.CATALAN),
        1e-13,
    )
    for x in X_REFLECTION_GRID:
        yield Check(
            f"oracle-J-reflection-x={_fmt(x)}",
            lambda x=x: (_quad("J", x=x) + _quad("J", x=1 / x), LOG2_SQ),
            1e-10,
        )
        yield Check(
            f"oracle-T-reflection-x={_fmt(x)}",
            lambda x=x: (_quad("T", x=x) + _quad("T", x=1 / x), math.pi**2 / 16),
            1e-10,
        )
    x17 = 4 + math.sqrt(17)
    yield Check(
        "oracle-J-reflection-x=4+sqrt17",
        lambda: (_quad("J", x=x17) + _quad("J", x=1 / x17), LOG2_SQ),
        1e-10,
    )
    yield Check("j-4+sqrt17", lambda: (cf.j_four_plus_sqrt17().value, _quad("J", x=x17)), 1e-10)
    yield Check(
        "oracle-J-reflection-x=2/5",
        lambda: (_quad("J", x=0.4) + _quad("J", x=2.5), LOG2_SQ),
        1e-10,
    )
    yield from honesty_checks()


HZN_GRID = (-2.0, -1.0, -0.5, 0.25, 0.75)
HZN_X_GRID = (0.1, 0.5, 1.0, 2.0, 10.0)


def funceq_checks() -> Iterator[Check]:
    for entry in fe.CATALOG:
        for x in X_REFLECTION_GRID:
            case = entry.case(x)
            yield Check(
                f"reflection-{entry.name}-x={_fmt(x)}",
                lambda c=case: (fe.reflection_sum(c), c.rhs()),
                1e-10,
            )
        if entry.domain == fe.UNIT:
            case = entry.case(1.0)
            yield Check(
                f"fixed-point-{entry.name}",
                lambda c=case: (2 * fe.f_unit(c), c.family.phi(c.alpha) ** 2),
                1e-10,
            )
    # non-symmetric parameters
    for family, a, b in (("LOG1P", 0.5, -0.3), ("ARCTAN", 2.0, 0.7), ("ARCSIN", 0.4, -0.9),
                         ("ARCSINH", 3.0, 1.5), ("DILOG", -2.0, 0.5)):
        for x in (0.5, 3.0):
            case = fe.PhiCase(family, a, b, x)
            yield Check(
                f"reflection-{family.lower()}-a={_fmt(a)}-b={_fmt(b)}-x={_fmt(x)}",
                lambda c=case: (fe.reflection_sum(c), c.rhs()),
                1e-10,
            )
    half = fe.PhiCase("ARCTAN", 2.0, 3.0, 1.0, fe.HALFLINE)
    yield Check("reflection-arctan-halfline-a=2-b=3-x=1", lambda: (fe.reflection_sum(half), half.rhs()), 1e-10)
    yield Check(
        "arcsinh-positive-rhs",
        lambda: (fe.reflection_sum(fe.PhiCase("ARCSINH", 1, 1, 2.0)), math.log(1 + math.sqrt(2)) ** 2),
        1e-10,
    )
    for x in (3.0, 0.5):
        yield Check(
            f"dilog-kernel-printed-x={_fmt(x)}",
            lambda x=x: (
                integrate_unit(dilog_kernel(x), complement=True).value
                + integrate_unit(dilog_kernel(1 / x), complement=True).value,
                -math.pi**4 / 36,
            ),
            1e-10,
        )
    for x in HZN_X_GRID:
        for u in HZN_GRID:
            for v in HZN_GRID:
                yield Check(
                    f"hzn-x={_fmt(x)}-u={_fmt(u)}-v={_fmt(v)}",
                    lambda x=x, u=u, v=v: (
                        fe.hzn(x, u, v) + fe.hzn(1 / x, v, u),
                        -math.log1p(-u) * math.log1p(-v),
                    ),
                    1e-10,
                )
    yield Check("series-n=200", lambda: (fe.central_binomial_series(200)[0], fe.central_binomial_limit()), 1e-10)
    for n in (10, 15, 20, 30, 50, 100):
        yield Check(f"series-tail-n={n}", lambda n=n: _series_tail(n), math.nan)


def _series_tail(n: int) -> tuple[float, float, float]:
    # abs_err is the actual tail (against the n = 200 sum); the tolerance is the bound
    partial, bound = fe.central_binomial_series(n)
    return partial, fe.central_binomial_series(200)[0], bound


def checks_for(suite: str) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    groups = {
        "specfun": specfun_checks,
        "closedform": closedform_checks,
        "funceq": funceq_checks,
    }
    names = groups if suite == "all" else (suite,)
    return [c for name in names for c in groups[name]()]


def run_checks(checks: list[Check], parallel: bool = False, workers: int | None = None) -> list[Report]:
    """Run checks, optionally on a thread pool; reports come back sorted by check_id."""
    if parallel:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(Check.run, checks))
    else:
        reports = [c.run() for c in checks]
    return sorted(reports, key=lambda r: r.check_id)

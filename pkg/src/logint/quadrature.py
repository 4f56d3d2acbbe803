"""Double-exponential quadrature on (0, 1) and (0, inf), plus the integrand catalog.

The unit interval uses the tanh-sinh map t = (1 + tanh((pi/2) sinh s)) / 2,
the half-line uses the exp-sinh map t = exp((pi/2) sinh s).  Each level halves
the step in s and reuses the previous level's nodes, so the difference between
consecutive levels serves as the error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Callable, Mapping

from . import specfun

_EPS = 2.0**-52
_MIN_LEVEL = 3
# s-range of the nodes; the half-line cap keeps t below 1e138 so t**2 stays finite
_S_MAX_UNIT = 6.6
_S_MAX_HALF = 6.0


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_level: int = 12

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("abs_tol and rel_tol must be positive")
        if not 3 <= self.max_level <= 16:
            raise ValueError("max_level must lie in [3, 16]")

    def target(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evaluations: int
    converged: bool


@lru_cache(maxsize=None)
def _unit_nodes(level: int, complement: bool = False) -> tuple[tuple[float, float, float], ...]:
    """(t, 1 - t, weight) for the nodes new at ``level``.

    Level 0 holds every multiple of h = 1; later levels only the odd
    multiples of h = 2**-level.  Weights exclude h.  Nodes that round onto
    0 are dropped; nodes where t rounds to 1.0 are kept only for
    complement-form integrands, which never see the rounded t alone.
    """
    h = 2.0**-level
    n = int(_S_MAX_UNIT / h)
    step = 1 if level == 0 else 2
    start = 0 if level == 0 else 1
    out = []
    for j in range(start, n + 1, step):
        for s in ((j * h, -j * h) if j else (0.0,)):
            v = 0.5 * math.pi * math.sinh(s)
            # t = 1/(1+exp(-2v)); dt/ds = pi cosh(s) t (1-t)
            e = math.exp(-2.0 * abs(v))
            small = e / (1.0 + e)
            t, tc = (1.0 - small, small) if v >= 0 else (small, 1.0 - small)
            if t <= 0.0 or tc <= 0.0 or (t >= 1.0 and not complement):
                continue
            w = math.pi * math.cosh(s) * small * (1.0 - small)
            out.append((t, tc, w))
    return tuple(out)


@lru_cache(maxsize=None)
def _half_nodes(level: int) -> tuple[tuple[float, float, float], ...]:
    h = 2.0**-level
    n = int(_S_MAX_HALF / h)
    step = 1 if level == 0 else 2
    start = 0 if level == 0 else 1
    out = []
    for j in range(start, n + 1, step):
        for s in ((j * h, -j * h) if j else (0.0,)):
            t = math.exp(0.5 * math.pi * math.sinh(s))
            if t == 0.0 or math.isinf(t):
                continue
            out.append((t, math.nan, 0.5 * math.pi * math.cosh(s) * t))
    return tuple(out)


def _integrate(f, nodes_at, cfg: QuadConfig, complement: bool = False) -> QuadResult:
    total = 0.0  # sum of w f over all nodes so far (without h)
    abs_total = 0.0
    evaluations = 0
    previous = None
    estimate = math.inf
    value = math.nan
    for level in range(cfg.max_level + 1):
        for t, tc, w in nodes_at(level):
            if complement:
                y = f(t, tc)
            else:
                y = f(t)
            evaluations += 1
            if math.isnan(y):
                return QuadResult(math.nan, math.inf, evaluations, False)
            total += w * y
            abs_total += abs(w * y)
        h = 2.0**-level
        value = total * h
        if math.isinf(value):
            return QuadResult(value, math.inf, evaluations, False)
        if previous is not None:
            # rounding floor keeps the estimate honest when levels agree exactly
            estimate = max(abs(value - previous), 16 * _EPS * abs_total * h)
            if level >= _MIN_LEVEL and estimate <= cfg.target(value):
                return QuadResult(value, estimate, evaluations, True)
        previous = value
    return QuadResult(value, estimate, evaluations, False)


def integrate_unit(
    f: Callable[..., float], cfg: QuadConfig | None = None, *, complement: bool = False
) -> QuadResult:
    """Integrate ``f`` over (0, 1); endpoints are never sampled.

    With ``complement=True`` the integrand is called as ``f(t, 1 - t)`` where
    the second argument is computed without cancellation.  Integrands singular
    at t = 1, such as 1/sqrt(1 - t), need this to converge tightly.
    """
    nodes = partial(_unit_nodes, complement=complement)
    return _integrate(f, nodes, cfg or QuadConfig(), complement)


def integrate_halfline(f: Callable[[float], float], cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over (0, inf) for integrands with algebraic or faster decay."""
    return _integrate(f, _half_nodes, cfg or QuadConfig())


# --- integrand catalog -------------------------------------------------------

ORACLE_NAMES = ("J", "T", "I", "LEMMA2", "LEMMA3", "HZN", "PHI_CASE")


def _require(params: Mapping, *keys):
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def _positive_exponent(params: Mapping) -> float:
    x = params.get("x", params.get("m"))
    if x is None:
        raise ValueError("missing parameter: x")
    x = float(x)
    if not x > 0:
        raise ValueError(f"exponent must be positive, got {x!r}")
    return x


def hzn_integrand(x: float, u: float, v: float) -> Callable[[float], float]:
    if not (u < 1 and u != 0 and v < 1 and v != 0):
        raise ValueError("HZN needs u, v in (-inf, 1) without 0")
    inv_v = 1.0 / v
    return lambda t: math.log1p(-u * t**x) / (inv_v - t)


def oracle(name: str, params: Mapping, cfg: QuadConfig | None = None) -> QuadResult:
    """Evaluate one of the cataloged integrals by quadrature.

    ``params`` keys by name: J/T/HZN take ``x`` (HZN also ``u``, ``v``);
    I takes ``m`` (or ``x``); LEMMA2/LEMMA3 take ``q``; PHI_CASE takes
    ``family``, ``alpha``, ``beta``, ``x`` and optionally ``domain``.
    """
    name = name.upper()
    if name == "J":
        x = _positive_exponent(params)
        f = lambda t: math.log1p(t**x) / (1.0 + t)
    elif name == "T":
        x = _positive_exponent(params)
        f = lambda t: math.atan(t**x) / (1.0 + t * t)
    elif name == "I":
        m = _positive_exponent(params)
        f = lambda t: math.log1p(t**m) / (1.0 + t * t)
    elif name == "LEMMA2":
        (q,) = _require(params, "q")
        if q < 0:
            raise ValueError("LEMMA2 needs q >= 0")
        r = math.sqrt(q)
        # hypot avoids t*t underflowing to 0 when q == 0
        f = lambda t: 2.0 * math.log(math.hypot(t, r)) / (1.0 + t)
    elif name == "LEMMA3":
        (q,) = _require(params, "q")
        if q <= 0:
            raise ValueError("LEMMA3 needs q > 0")
        r = math.sqrt(q)
        f = lambda t: 2.0 * math.log(math.hypot(t, r)) / (1.0 + t * t)
    elif name == "HZN":
        x = _positive_exponent(params)
        u, v = (float(p) for p in _require(params, "u", "v"))
        f = hzn_integrand(x, u, v)
    elif name == "PHI_CASE":
        from .funceq import PhiCase, case_integral

        family, alpha, beta, x = _require(params, "family", "alpha", "beta", "x")
        case = PhiCase(family, float(alpha), float(beta), float(x), params.get("domain", "UNIT"))
        return case_integral(case, cfg)
    else:
        raise ValueError(f"unknown integrand {name!r}; expected one of {', '.join(ORACLE_NAMES)}")
    return integrate_unit(f, cfg)


def dilog_kernel(x: float) -> Callable[[float, float], float]:
    """Integrand log(1-t) Li2(t^x) / t, in complement form."""
    return lambda t, tc: math.log(tc) * specfun.li2(t**x) / t

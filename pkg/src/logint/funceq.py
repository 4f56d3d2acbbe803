"""Reflection identities of the form F(x; a, b) + F(1/x; b, a) = phi(a) phi(b) - phi(0)^2.

For a kernel phi the unit-interval functional is

    F(x; alpha, beta) = alpha * int_0^1 phi'(alpha t) phi(beta t^x) dt

and the half-line functional G(x; a, b) is the same integral over (0, inf),
whose right-hand side uses lim_{t->inf} phi(a t) phi(b t) instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import specfun
from .quadrature import QuadConfig, QuadResult, hzn_integrand, integrate_halfline, integrate_unit

UNIT = "UNIT"
HALFLINE = "HALFLINE"


class QuadratureError(RuntimeError):
    """Raised when the quadrature behind a functional does not converge."""

    def __init__(self, what: str, result: QuadResult):
        super().__init__(f"{what}: quadrature did not converge (estimate {result.err_estimate:.3g})")
        self.result = result


@dataclass(frozen=True)
class PhiFamily:
    id: str
    phi: Callable[[float], float]
    phi_prime: Callable[[float], float]
    phi_zero: float
    halfline_ok: bool
    # lim_{t->inf} phi(a t) phi(b t) for a, b > 0, when it is finite
    halfline_limit: float | None = None


def _dilog_prime(t: float) -> float:
    # -log(1-t)/t, removable singularity at 0
    if t == 0.0:
        return 1.0
    return -math.log1p(-t) / t


def _arcsin_prime(t: float) -> float:
    return 1.0 / math.sqrt((1.0 - t) * (1.0 + t))


def _power(t: float, x: float) -> float:
    # t**x saturating to inf; half-line nodes reach t ~ 1e137
    try:
        return t**x
    except OverflowError:
        return math.inf


def _arcsin_power(b: float, x: float, t: float, tc: float) -> float:
    # asin(b t^x); near t = 1 with |b| = 1 use asin(y) = pi/2 - 2 asin(sqrt((1-y)/2))
    # with 1 - t^x formed from tc, since asin has a square-root singularity at 1
    if abs(b) != 1.0 or t < 0.5:
        return math.asin(b * t**x)
    gap = -math.expm1(x * math.log1p(-tc))
    return math.copysign(0.5 * math.pi - 2.0 * math.asin(math.sqrt(0.5 * gap)), b)


FAMILIES: dict[str, PhiFamily] = {
    f.id: f
    for f in (
        PhiFamily("LOG1P", math.log1p, lambda t: 1.0 / (1.0 + t), 0.0, False),
        PhiFamily("ARCTAN", math.atan, lambda t: 1.0 / (1.0 + t * t), 0.0, True, math.pi**2 / 4),
        PhiFamily("ARCSIN", math.asin, _arcsin_prime, 0.0, False),
        PhiFamily("ARCSINH", math.asinh, lambda t: 1.0 / math.sqrt(1.0 + t * t), 0.0, False),
        PhiFamily("DILOG", specfun.li2, _dilog_prime, 0.0, False),
    )
}


def _family(family: str | PhiFamily) -> PhiFamily:
    if isinstance(family, PhiFamily):
        return family
    try:
        return FAMILIES[family.upper()]
    except KeyError:
        raise ValueError(f"unknown phi family {family!r}; expected one of {', '.join(FAMILIES)}") from None


@dataclass(frozen=True)
class PhiCase:
    """One instance of the reflection identity.

    ``alpha``/``beta`` play the role of (a, b) when ``domain`` is HALFLINE.
    ``family`` may be given by name.
    """

    family: PhiFamily
    alpha: float
    beta: float
    x: float
    domain: str = UNIT

    def __post_init__(self):
        fam = _family(self.family)
        object.__setattr__(self, "family", fam)
        domain = self.domain.upper()
        object.__setattr__(self, "domain", domain)
        if domain not in (UNIT, HALFLINE):
            raise ValueError(f"domain must be UNIT or HALFLINE, got {self.domain!r}")
        if not self.x > 0:
            raise ValueError(f"x must be positive, got {self.x!r}")
        a, b = self.alpha, self.beta
        if domain == HALFLINE:
            if not fam.halfline_ok:
                raise ValueError(f"{fam.id} has no finite limit at infinity")
            if not (a > 0 and b > 0):
                raise ValueError("half-line parameters must be positive")
        elif fam.id == "LOG1P" and not (a > -1 and b > -1):
            raise ValueError("LOG1P needs alpha, beta > -1")
        elif fam.id == "ARCSIN" and not (abs(a) <= 1 and abs(b) <= 1):
            raise ValueError("ARCSIN needs |alpha|, |beta| <= 1")
        elif fam.id == "DILOG" and not (a <= 1 and b <= 1):
            raise ValueError("DILOG needs alpha, beta <= 1")

    def swapped(self) -> PhiCase:
        """The partner instance (1/x; beta, alpha)."""
        return PhiCase(self.family, self.beta, self.alpha, 1.0 / self.x, self.domain)

    def rhs(self) -> float:
        fam = self.family
        if self.domain == HALFLINE:
            return fam.halfline_limit - fam.phi_zero**2
        return fam.phi(self.alpha) * fam.phi(self.beta) - fam.phi_zero**2

    def integrand(self) -> Callable[[float, float], float]:
        """alpha phi'(alpha t) phi(beta t^x) as a function of (t, 1 - t)."""
        fam, a, b, x = self.family, self.alpha, self.beta, self.x
        dphi, phi = fam.phi_prime, fam.phi
        if fam.id == "ARCSIN" and (abs(a) == 1.0 or abs(b) == 1.0):
            return lambda t, tc: (
                a * dphi(a * t) if abs(a) != 1.0 else a / math.sqrt(tc * (1.0 + t))
            ) * _arcsin_power(b, x, t, tc)
        if fam.id == "DILOG" and a == 1.0:
            return lambda t, tc: -math.log(tc) / t * phi(b * t**x)
        return lambda t, tc: a * dphi(a * t) * phi(b * _power(t, x))


def case_integral(case: PhiCase, cfg: QuadConfig | None = None) -> QuadResult:
    f = case.integrand()
    if case.domain == HALFLINE:
        return integrate_halfline(lambda t: f(t, math.nan), cfg)
    return integrate_unit(f, cfg, complement=True)


def _value(case: PhiCase, cfg: QuadConfig | None) -> float:
    res = case_integral(case, cfg)
    if not res.converged:
        raise QuadratureError(f"{case.family.id} x={case.x:g}", res)
    return res.value


def f_unit(case: PhiCase, cfg: QuadConfig | None = None) -> float:
    if case.domain != UNIT:
        raise ValueError("f_unit needs a UNIT case")
    return _value(case, cfg)


def g_halfline(case: PhiCase, cfg: QuadConfig | None = None) -> float:
    if case.domain != HALFLINE:
        raise ValueError("g_halfline needs a HALFLINE case")
    return _value(case, cfg)


def reflection_sum(case: PhiCase, cfg: QuadConfig | None = None) -> float:
    """F(x; alpha, beta) + F(1/x; beta, alpha), both by quadrature."""
    return _value(case, cfg) + _value(case.swapped(), cfg)


def reflection_residual(case: PhiCase, cfg: QuadConfig | None = None) -> float:
    return abs(reflection_sum(case, cfg) - case.rhs())


def hzn(x: float, u: float, v: float, cfg: QuadConfig | None = None) -> float:
    """Herglotz-Zagier-Novikov function int_0^1 log(1 - u t^x)/(1/v - t) dt for real u, v < 1, nonzero."""
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    res = integrate_unit(hzn_integrand(x, u, v), cfg)
    if not res.converged:
        raise QuadratureError(f"HZN x={x:g} u={u:g} v={v:g}", res)
    return res.value


def hzn_residual(x: float, u: float, v: float, cfg: QuadConfig | None = None) -> float:
    """|F(x;u,v) + F(1/x;v,u) + log(1-u) log(1-v)|."""
    total = hzn(x, u, v, cfg) + hzn(1.0 / x, v, u, cfg)
    return abs(total + math.log1p(-u) * math.log1p(-v))


def central_binomial_series(n_max: int) -> tuple[float, float]:
    """Partial sum of sum_n 2^n H_n / ((2n+1) C(2n,n)), H_n = sum_{k<=n} (3/2)^k / k.

    Returns ``(partial_sum, tail_bound)``.  The terms are carried in a
    scaled form, r_n = (3/2)^n 2^n / ((2n+1) C(2n,n)) and g_n = H_n / (3/2)^n,
    so nothing overflows.  From n = 10 on consecutive terms shrink by a factor
    below 0.76, which gives the geometric tail bound.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ratio = 0.76
    anchor = max(n_max, 10)
    r, g = 0.5, 1.0  # n = 1
    partial = 0.0
    extra = 0.0  # terms n_max < n <= anchor
    term = r * g
    for n in range(1, anchor + 1):
        if n > 1:
            r *= 1.5 * n / (2 * n + 1)
            g = g / 1.5 + 1.0 / n
            term = r * g
        if n <= n_max:
            partial += term
        else:
            extra += term
    return partial, extra + term * ratio / (1.0 - ratio)


def central_binomial_limit() -> float:
    """(pi/2) log 2 + (10/3) G - (2 pi/3) log(2 + sqrt 3)."""
    pi, G = specfun.PI, specfun.CATALAN
    return math.fsum([0.5 * pi * specfun.LOG2, 10.0 * G / 3.0, -2.0 * pi / 3.0 * math.log(2.0 + math.sqrt(3.0))])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    alpha: float
    beta: float
    domain: str = UNIT

    def case(self, x: float) -> PhiCase:
        return PhiCase(self.family, self.alpha, self.beta, x, self.domain)


# the alpha = beta = 1 (a = b = 1) instances of each kernel
CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("log1p", "LOG1P", 1.0, 1.0),
    CatalogEntry("arctan", "ARCTAN", 1.0, 1.0),
    CatalogEntry("arcsin", "ARCSIN", 1.0, 1.0),
    CatalogEntry("arcsinh", "ARCSINH", 1.0, 1.0),
    CatalogEntry("dilog", "DILOG", 1.0, 1.0),
    CatalogEntry("arctan-halfline", "ARCTAN", 1.0, 1.0, HALFLINE),
)

X_GRID = (0.1, 1 / 3, 0.5, 1.0, 2.0, 3.0, 10.0)

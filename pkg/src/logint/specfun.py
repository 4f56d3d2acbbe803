"""Real-argument dilogarithm, inverse tangent integral and constants.

Both functions reduce their argument to a region where a power series
converges geometrically, then sum the series to double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Catalan's constant to 30 digits (OEIS A006752).
_CATALAN_LITERAL = 0.915965594177219015054603514932

_EPS = 2.0**-53
_MAX_TERMS = 500


@dataclass(frozen=True)
class Constants:
    pi: float = math.pi
    pi_sq_over_6: float = math.pi**2 / 6.0
    log2: float = math.log(2.0)
    catalan_G: float = _CATALAN_LITERAL


CONSTANTS = Constants()

PI = CONSTANTS.pi
ZETA2 = CONSTANTS.pi_sq_over_6
LOG2 = CONSTANTS.log2
CATALAN = CONSTANTS.catalan_G


def _li2_series(x: float) -> float:
    # Sum_{k>=1} x^k / k^2, intended for |x| <= 1/2.
    if x == 0.0:
        return 0.0
    total = 0.0
    power = 1.0
    for k in range(1, _MAX_TERMS + 1):
        power *= x
        term = power / (k * k)
        total += term
        if abs(term) < _EPS * abs(total):
            break
    return total


def li2(x: float) -> float:
    """Dilogarithm Li2(x) on the real branch x <= 1.

    Raises ValueError for x > 1, where Li2 is complex-valued.
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if x > 1.0:
        raise ValueError(f"li2 is real only for x <= 1, got {x!r}")
    if x == 1.0:
        return ZETA2
    if x == 0.0:
        return 0.0
    if x < -1.0:
        # inversion: Li2(x) + Li2(1/x) = -pi^2/6 - log^2(-x)/2
        lx = math.log(-x)
        return -ZETA2 - 0.5 * lx * lx - li2(1.0 / x)
    if x < -0.5:
        # Landen: Li2(x) + Li2(x/(x-1)) = -log^2(1-x)/2, image in (1/3, 1/2]
        l1 = math.log1p(-x)
        return -_li2_series(x / (x - 1.0)) - 0.5 * l1 * l1
    if x <= 0.5:
        return _li2_series(x)
    # Euler reflection for (1/2, 1)
    return ZETA2 - math.log(x) * math.log1p(-x) - _li2_series(1.0 - x)


def _ti2_series(x: float) -> float:
    # Sum_{k>=0} (-1)^k x^(2k+1) / (2k+1)^2, used for 0 <= x <= 1/2.
    if x == 0.0:
        return 0.0
    x2 = x * x
    power = x
    total = x
    for k in range(1, _MAX_TERMS):
        power *= -x2
        n = 2 * k + 1
        term = power / (n * n)
        total += term
        if abs(term) < _EPS * abs(total):
            break
    return total


def _ti2_euler(x: float) -> float:
    # Euler's arctan series arctan(u)/u = sum c_k u^2k / (1+u^2)^(k+1)
    # integrates term by term (u = tan psi) into
    #   Ti2(x) = sum_k c_k S_k,   S_k = int_0^arctan(x) sin^2k(psi) dpsi,
    # with c_k = 4^k (k!)^2 / (2k+1)!.  The terms shrink like
    # (x^2/(1+x^2))^k, i.e. at least as fast as 2^-k on 0 < x <= 1.
    psi = math.atan(x)
    s, c = math.sin(psi), math.cos(psi)
    s2 = s * s
    sk = psi
    ck = 1.0
    total = sk
    odd_power = s  # sin^(2k-1) psi
    for k in range(1, _MAX_TERMS):
        sk = ((2 * k - 1) * sk - odd_power * c) / (2 * k)
        odd_power *= s2
        ck *= (2 * k) / (2 * k + 1)
        term = ck * sk
        total += term
        if term < _EPS * total:
            break
    return total


def _ti2_positive(x: float) -> float:
    if x == 1.0:
        return CATALAN
    if x > 1.0:
        # Ti2(x) - Ti2(1/x) = (pi/2) log x
        return _ti2_positive(1.0 / x) + 0.5 * PI * math.log(x)
    if x <= 0.5:
        return _ti2_series(x)
    return _ti2_euler(x)


def ti2(x: float) -> float:
    """Inverse tangent integral Ti2(x) = int_0^x arctan(u)/u du."""
    x = float(x)
    if math.isnan(x):
        return math.nan
    if math.isinf(x):
        return math.copysign(math.inf, x)
    if x < 0.0:
        return -_ti2_positive(-x)
    return _ti2_positive(x)

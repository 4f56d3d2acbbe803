"""Closed forms for the logarithmic integrals over (0, 1).

J(m) = int_0^1 log(1 + t^m) / (1 + t) dt and I(m) = int_0^1 log(1 + t^m) / (1 + t^2) dt
for odd m, J(2b) for even exponents, and the two auxiliary integrals
int_0^1 log(u^2 + q) / (1 + u) du and int_0^1 log(u^2 + q) / (1 + u^2) du.

Every evaluator returns a :class:`ClosedForm`: the numeric value together
with the :class:`TermSum` it was computed from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .specfun import CATALAN, LOG2, PI, li2, ti2

# atom kinds, in canonical rendering order
_KIND_ORDER = (
    "LI2", "TI2", "LOG2_SQ", "PI_SQ", "CATALAN",
    "PI_LOG", "LOG2_LOG", "LOG", "LOG_SQ", "ATAN_SQ", "UNIT",
)
_NULLARY = {"PI_SQ", "LOG2_SQ", "CATALAN", "UNIT"}
_DISPLAY = {"LI2": "Li2", "TI2": "Ti2"}


@dataclass(frozen=True)
class Atom:
    """One transcendental building block, e.g. ``Atom("LI2", 0.75)``."""

    kind: str
    arg: float | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if (self.kind in _NULLARY) != (self.arg is None):
            raise ValueError(f"atom {self.kind} takes {'no' if self.kind in _NULLARY else 'one'} argument")

    def value(self) -> float:
        k, a = self.kind, self.arg
        if k == "PI_SQ":
            return PI * PI
        if k == "LOG2_SQ":
            return LOG2 * LOG2
        if k == "CATALAN":
            return CATALAN
        if k == "UNIT":
            return 1.0
        if k == "PI_LOG":
            return PI * math.log(a)
        if k == "LOG2_LOG":
            return LOG2 * math.log(a)
        if k == "LOG":
            return math.log(a)
        if k == "LOG_SQ":
            return math.log(a) ** 2
        if k == "ATAN_SQ":
            return math.atan(a) ** 2
        if k == "LI2":
            return li2(a)
        return ti2(a)

    def sort_key(self):
        return (_KIND_ORDER.index(self.kind), 0.0 if self.arg is None else self.arg)

    def render(self) -> str:
        name = _DISPLAY.get(self.kind, self.kind)
        if self.arg is None:
            return name
        return f"{name}({self.arg:.15g})"


def _render_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class TermSum:
    """Rational linear combination of atoms; immutable once built.

    Terms with the same atom are merged and zero coefficients dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Fraction | int, Atom]] = ()):
        merged: dict[Atom, Fraction] = {}
        for coeff, atom in terms:
            merged[atom] = merged.get(atom, Fraction(0)) + Fraction(coeff)
        ordered = sorted(
            ((c, a) for a, c in merged.items() if c != 0), key=lambda ca: ca[1].sort_key()
        )
        object.__setattr__(self, "_terms", tuple(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("TermSum is immutable")

    @property
    def terms(self) -> tuple[tuple[Fraction, Atom], ...]:
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, TermSum) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other: TermSum) -> TermSum:
        return TermSum(self._terms + other._terms)

    def __neg__(self) -> TermSum:
        return TermSum((-c, a) for c, a in self._terms)

    def __sub__(self, other: TermSum) -> TermSum:
        return self + (-other)

    def evaluate(self) -> float:
        return math.fsum(float(c) * a.value() for c, a in self._terms)

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (c, atom) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if atom.kind == "UNIT":
                body = _render_coefficient(mag)
            elif mag == 1:
                body = atom.render()
            else:
                body = f"{_render_coefficient(mag)}*{atom.render()}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"TermSum({self.render()!r})"


class ClosedForm(NamedTuple):
    value: float
    terms: TermSum


def _closed(terms: Iterable[tuple[Fraction | int, Atom]]) -> ClosedForm:
    ts = TermSum(terms)
    return ClosedForm(ts.evaluate(), ts)


@dataclass(frozen=True)
class OddM:
    m: int

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            raise TypeError(f"m must be an int, got {type(self.m).__name__}")
        if self.m < 1 or self.m % 2 != 1:
            raise ValueError(f"m must be a positive odd integer, got {self.m}")


def _odd(m: int | OddM) -> int:
    return m.m if isinstance(m, OddM) else OddM(m).m


def phi_nodes(m: int | OddM) -> list[float]:
    """cos((2k+1) pi / m) for k = 0 .. (m-3)/2; empty for m = 1."""
    m = _odd(m)
    return [math.cos((2 * k + 1) * PI / m) for k in range((m - 1) // 2)]


def log_decomposition(m: int | OddM, u: float) -> float:
    """Factored form of log(((1-u)/(1+u))^m + 1) built from the nodes of z^m + 1."""
    m = _odd(m)
    if m < 3:
        raise ValueError("log_decomposition needs m >= 3")
    if not 0.0 < u < 1.0:
        raise ValueError(f"u must lie in (0, 1), got {u!r}")
    parts = [0.5 * (m + 1) * LOG2, -m * math.log1p(u)]
    for phi in phi_nodes(m):
        parts.append(math.log1p(phi))
        parts.append(math.log(u * u + (1.0 - phi) / (1.0 + phi)))
    return math.fsum(parts)


def _half_angle_li2_terms(m: int):
    # Li2(cos^2((2k+1) pi / (2m))), k = 0 .. (m-3)/2
    for k in range((m - 1) // 2):
        yield Atom("LI2", math.cos((2 * k + 1) * PI / (2 * m)) ** 2)


def j_odd(m: int | OddM) -> ClosedForm:
    """J(m) = int_0^1 log(1 + t^m)/(1 + t) dt for odd m, as Li2 values at real arguments."""
    m = _odd(m)
    terms = [(Fraction(m, 2), Atom("LOG2_SQ")), (-Fraction(m * m - 1, 24 * m), Atom("PI_SQ"))]
    terms += [(Fraction(1, 2), a) for a in _half_angle_li2_terms(m)]
    return _closed(terms)


def j_recip_odd(m: int | OddM) -> ClosedForm:
    """J(1/m) for odd m; complements :func:`j_odd` to log^2 2."""
    m = _odd(m)
    terms = [(Fraction(2 - m, 2), Atom("LOG2_SQ")), (Fraction(m * m - 1, 24 * m), Atom("PI_SQ"))]
    terms += [(-Fraction(1, 2), a) for a in _half_angle_li2_terms(m)]
    return _closed(terms)


def j_odd_intermediate(m: int | OddM) -> float:
    """J(m) before the arctan terms are reduced to rational multiples of pi.

    Used only to cross-check :func:`j_odd`.
    """
    m = _odd(m)
    parts = [0.5 * m * LOG2 * LOG2]
    for phi in phi_nodes(m):
        parts.append(-math.atan(math.sqrt((1.0 + phi) / (1.0 - phi))) ** 2)
        parts.append(0.5 * li2(0.5 * (1.0 + phi)))
    return math.fsum(parts)


def i_odd(m: int | OddM) -> ClosedForm:
    """I(m) = int_0^1 log(1 + x^m)/(1 + x^2) dx for odd m.

    The k-th Ti2 argument is (sin t_k - 1)/cos t_k with t_k = (2k+1) pi/m,
    which equals (sqrt(1 - phi_k^2) - 1)/phi_k without a square-root sign
    choice.
    """
    m = _odd(m)
    terms = [(Fraction(m, 8), Atom("PI_LOG", 2.0)), (-Fraction(m - 1, 2), Atom("CATALAN"))]
    for k in range((m - 1) // 2):
        theta = (2 * k + 1) * PI / m
        s, c = math.sin(theta), math.cos(theta)
        # (2k+1)/m = 1/2 has no solution for odd m
        assert c != 0.0
        terms.append((Fraction(1, 4), Atom("PI_LOG", 1.0 + s)))
        terms.append((Fraction(1), Atom("TI2", (s - 1.0) / c)))
    return _closed(terms)


def i3_prior_form() -> ClosedForm:
    """Earlier evaluation of I(3): (pi/8) log 2 - (5/3) G + (pi/3) log(2 + sqrt 3)."""
    return _closed([
        (Fraction(1, 8), Atom("PI_LOG", 2.0)),
        (-Fraction(5, 3), Atom("CATALAN")),
        (Fraction(1, 3), Atom("PI_LOG", 2.0 + math.sqrt(3.0))),
    ])


def i3_expanded_form() -> ClosedForm:
    """I(3) as -(pi/8) log 2 - G + (pi/2) log(1 + sqrt 3) - Ti2(2 - sqrt 3)."""
    return _closed([
        (-Fraction(1, 8), Atom("PI_LOG", 2.0)),
        (-1, Atom("CATALAN")),
        (Fraction(1, 2), Atom("PI_LOG", 1.0 + math.sqrt(3.0))),
        (-1, Atom("TI2", 2.0 - math.sqrt(3.0))),
    ])


def j_even(b: int) -> ClosedForm:
    """J(2b) = int_0^1 log(1 + u^(2b))/(1 + u) du for integer b >= 1."""
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise ValueError(f"b must be a positive integer, got {b!r}")
    terms = []
    for k in range(2 * b):
        terms.append((Fraction(1, 2), Atom("LOG_SQ", 2.0 * math.sin((2 * k + 1) * PI / (4 * b)))))
    # zeta(2) = pi^2/6
    terms.append((Fraction(1 - 2 * b * b, 48 * b), Atom("PI_SQ")))
    terms.append((1, Atom("LOG2_SQ")))
    for k in range(b):
        terms.append((-Fraction(1, 2), Atom("LOG_SQ", 2.0 * math.sin((2 * k + 1) * PI / (2 * b)))))
    return _closed(terms)


def lemma2_integral(q: float) -> ClosedForm:
    """int_0^1 log(u^2 + q)/(1 + u) du for q >= 0."""
    q = float(q)
    if not q >= 0.0:
        raise ValueError(f"q must be nonnegative, got {q!r}")
    terms = [(1, Atom("LOG2_LOG", 1.0 + q)), (Fraction(1, 2), Atom("LI2", 1.0 / (q + 1.0)))]
    if q == 0.0:
        # arctan(1/sqrt(q))^2 -> pi^2/4
        terms.append((-Fraction(1, 4), Atom("PI_SQ")))
    else:
        terms.append((-1, Atom("ATAN_SQ", 1.0 / math.sqrt(q))))
    return _closed(terms)


def lemma3_integral(q: float) -> ClosedForm:
    """int_0^1 log(x^2 + q)/(1 + x^2) dx for q > 0."""
    q = float(q)
    if not q > 0.0:
        raise ValueError(f"q must be positive, got {q!r}")
    r = math.sqrt(q)
    return _closed([
        (Fraction(1, 2), Atom("PI_LOG", 1.0 + r)),
        (1, Atom("TI2", (r - 1.0) / (r + 1.0))),
        (-1, Atom("CATALAN")),
    ])


def j_quoted_m3() -> ClosedForm:
    """Previously published value for J(3): Li2(-1/3)/2 + log^2(3)/2 - zeta(2)/6.

    It does not agree with J(3); kept as a negative control.
    """
    return _closed([
        (Fraction(1, 2), Atom("LI2", -1.0 / 3.0)),
        (Fraction(1, 2), Atom("LOG_SQ", 3.0)),
        (-Fraction(1, 36), Atom("PI_SQ")),
    ])


def j_four_plus_sqrt17() -> ClosedForm:
    """J(4 + sqrt 17) = -pi^2/6 + log^2(2)/2 + log 2 log(4 + sqrt 17)."""
    return _closed([
        (-Fraction(1, 6), Atom("PI_SQ")),
        (Fraction(1, 2), Atom("LOG2_SQ")),
        (1, Atom("LOG2_LOG", 4.0 + math.sqrt(17.0))),
    ])

"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even
under capture) or directly with ``python tests/test_acceptance.py``.
"""

import math
import random
import sys

import pytest

from logint import closedform as cf
from logint import funceq as fe
from logint.quadrature import dilog_kernel, integrate_unit, oracle
from logint.specfun import CATALAN, li2, ti2

LOG2_SQ = math.log(2) ** 2
SQRT3 = math.sqrt(3)
X_GRID = (0.1, 1 / 3, 0.5, 1.0, 2.0, 3.0, 10.0)
ODD_49 = range(1, 50, 2)

_printer = None


def report(n, ok, detail, informational=False):
    tag = "INFO" if informational else ("PASS" if ok else "FAIL")
    line = f"[{tag}] criterion {n}: {detail}"
    if _printer is None:
        print(line)
    else:
        with _printer.disabled():
            print("\n" + line)
    if not informational:
        assert ok, line


@pytest.fixture(autouse=True)
def _show(capsys):
    global _printer
    _printer = capsys
    yield
    _printer = None


def quad(name, **params):
    res = oracle(name, params)
    assert res.converged, (name, params)
    return res.value


def test_criterion_01_odd_j_sweep():
    worst = max(abs(cf.j_odd(m).value - quad("J", x=m)) for m in ODD_49)
    spot = abs(cf.j_odd(3).value - (0.5 * li2(0.75) + 1.5 * LOG2_SQ - math.pi**2 / 9))
    report(1, worst <= 1e-10 and spot <= 1e-13,
           f"J(m) odd m<=49 worst |closed-oracle| = {worst:.2e} (<= 1e-10); m=3 form gap {spot:.2e} (<= 1e-13)")


def test_criterion_02_odd_i_sweep():
    worst = max(abs(cf.i_odd(m).value - quad("I", m=m)) for m in ODD_49)
    forms = (cf.i_odd(3).value, cf.i3_prior_form().value, cf.i3_expanded_form().value)
    pair = max(abs(a - b) for a in forms for b in forms)
    report(2, worst <= 1e-10 and pair <= 1e-13,
           f"I(m) odd m<=49 worst |closed-oracle| = {worst:.2e} (<= 1e-10); m=3 three forms pairwise {pair:.2e} (<= 1e-13)")


def test_criterion_03_reflection():
    closed = max(abs(cf.j_odd(m).value + cf.j_recip_odd(m).value - LOG2_SQ) for m in range(1, 100, 2))
    xs = X_GRID + (4 + math.sqrt(17),)
    j_res = max(abs(quad("J", x=x) + quad("J", x=1 / x) - LOG2_SQ) for x in xs)
    t_res = max(abs(quad("T", x=x) + quad("T", x=1 / x) - math.pi**2 / 16) for x in xs)
    x17 = abs(cf.j_four_plus_sqrt17().value - quad("J", x=4 + math.sqrt(17)))
    ok = closed <= 1e-13 and j_res <= 1e-10 and t_res <= 1e-10 and x17 <= 1e-10
    report(3, ok, f"closed J(m)+J(1/m) m<=99 {closed:.2e}; oracle J {j_res:.2e}, T {t_res:.2e}; "
                  f"J(4+sqrt17) vs closed form {x17:.2e}")


def test_criterion_04_even_j():
    worst = max(abs(cf.j_even(b).value - quad("J", x=2 * b)) for b in range(1, 21))
    same = abs(cf.j_even(1).value - cf.lemma2_integral(1).value)
    report(4, worst <= 1e-10 and same <= 1e-13,
           f"J(2b) b<=20 worst {worst:.2e} (<= 1e-10); J(2) vs lemma2(q=1) {same:.2e} (<= 1e-13)")


def test_criterion_05_lemmas():
    w2 = max(abs(cf.lemma2_integral(q).value - quad("LEMMA2", q=q)) for q in (0, 0.1, 0.5, 1, 2, 3, 10, 100))
    w3 = max(abs(cf.lemma3_integral(q).value - quad("LEMMA3", q=q)) for q in (1e-4, 0.5, 1, 3, 10, 1e4))
    q1 = abs(cf.lemma3_integral(1).value - (math.pi / 2 * math.log(2) - CATALAN))
    q0 = abs(cf.lemma2_integral(0).value + math.pi**2 / 6)
    ok = w2 <= 1e-10 and w3 <= 1e-10 and q1 <= 1e-13 and q0 <= 1e-13
    report(5, ok, f"lemma2 grid {w2:.2e}, lemma3 grid {w3:.2e}; q=1 value {q1:.2e}; q=0 limit {q0:.2e}")


def test_criterion_06_functional_equations():
    cat = max(fe.reflection_residual(e.case(x)) for e in fe.CATALOG for x in X_GRID)
    grid = (-2.0, -1.0, -0.5, 0.25, 0.75)
    hzn = max(fe.hzn_residual(x, u, v) for x in (0.1, 0.5, 1.0, 2.0, 10.0) for u in grid for v in grid)
    half = fe.PhiCase("ARCTAN", 2.0, 3.0, 1.0, "HALFLINE")
    half_res = abs(fe.reflection_sum(half) - math.pi**2 / 4)
    asinh = abs(fe.reflection_sum(fe.PhiCase("ARCSINH", 1, 1, 2)) - math.log1p(math.sqrt(2)) ** 2)
    # displayed dilog form: each integral is minus the unit-interval functional
    printed = integrate_unit(dilog_kernel(3), complement=True).value
    printed += integrate_unit(dilog_kernel(1 / 3), complement=True).value
    dilog = abs(printed + math.pi**4 / 36)
    ok = max(cat, hzn, half_res, asinh, dilog) <= 1e-10
    report(6, ok, f"5 families x 7 x-values + half-line arctan {cat:.2e}; HZN 5x5x5 {hzn:.2e}; "
                  f"half-line a=2,b=3 {half_res:.2e}; arcsinh vs +log^2(1+sqrt2) {asinh:.2e} (printed sign is minus); "
                  f"printed dilog form vs -pi^4/36 {dilog:.2e}")


def test_criterion_07_series():
    limit = (math.pi / 2) * math.log(2) + 10 * CATALAN / 3 - 2 * math.pi / 3 * math.log(2 + SQRT3)
    s200 = fe.central_binomial_series(200)[0]
    gap = abs(s200 - limit)
    tail_ok = all(abs(s200 - p) <= b for p, b in map(fe.central_binomial_series, range(10, 201)))
    report(7, gap <= 1e-10 and tail_ok, f"|S(200) - limit| = {gap:.2e} (<= 1e-10); tail bound honored for n=10..200: {tail_ok}")


def test_criterion_08_special_functions():
    rng = random.Random(8)
    refl = landen = 0.0
    for _ in range(1000):
        x = rng.uniform(1e-6, 1 - 1e-6)
        refl = max(refl, abs(li2(x) + li2(1 - x) - math.pi**2 / 6 + math.log(x) * math.log1p(-x)))
        y = rng.uniform(-1.0, 0.9)
        landen = max(landen, abs(li2(y) + li2(y / (y - 1)) + 0.5 * math.log1p(-y) ** 2))
    inv = 0.0
    for _ in range(1000):
        x = rng.uniform(1e-6, 50.0)
        inv = max(inv, abs(ti2(x) - ti2(1 / x) - math.pi / 2 * math.log(x)))
    e32 = abs(ti2(2 - SQRT3) - (2 * CATALAN / 3 - math.pi / 12 * math.log(2 + SQRT3)))
    # 362 - 209 sqrt3 = 1/(362 + 209 sqrt3); forming the difference directly cancels ~5 digits
    e33 = abs(ti2(2 + SQRT3) - (2 * CATALAN / 3 - math.pi / 12 * math.log(1 / (362 + 209 * SQRT3))))
    ok = max(refl, landen, inv, e32, e33) <= 1e-12
    report(8, ok, f"Li2 reflection {refl:.2e}, Landen {landen:.2e} (1000 pts each); Ti2 inversion on (0,50] {inv:.2e}; "
                  f"Ti2(2-sqrt3) {e32:.2e}, Ti2(2+sqrt3) {e33:.2e}")


def _mp_reference(kind, p):
    import mpmath as mp

    with mp.workdps(30):
        if kind == "J":
            f = lambda t: mp.log1p(t**p) / (1 + t)
        elif kind == "I":
            f = lambda t: mp.log1p(t**p) / (1 + t * t)
        elif kind == "LEMMA2":
            f = lambda t: mp.log(t * t + p) / (1 + t)
        else:
            f = lambda t: mp.log(t * t + p) / (1 + t * t)
        return mp.quad(f, [0, 0.5, 0.9, 1])


def test_criterion_09_estimate_honesty():
    # references: exact constants where they exist, else 30-digit mpmath quadrature;
    # the large-m closed forms carry ~1e-14 cancellation error, more than the oracle's
    cases = [
        (oracle("J", {"x": 1}), 0.5 * LOG2_SQ),
        (oracle("T", {"x": 1}), math.pi**2 / 32),
        (oracle("I", {"m": 1}), math.pi / 8 * math.log(2)),
        (oracle("LEMMA3", {"q": 1}), math.pi / 2 * math.log(2) - CATALAN),
        (oracle("LEMMA2", {"q": 0}), -math.pi**2 / 6),
        (oracle("HZN", {"x": 1, "u": -1, "v": -1}), -0.5 * LOG2_SQ),
        (oracle("PHI_CASE", {"family": "ARCTAN", "alpha": 1, "beta": 1, "x": 1, "domain": "HALFLINE"}), math.pi**2 / 8),
    ]
    # at x = 1 each family's functional is phi(1)^2 / 2
    for fid, fam in fe.FAMILIES.items():
        cases.append((oracle("PHI_CASE", {"family": fid, "alpha": 1, "beta": 1, "x": 1}), 0.5 * fam.phi(1.0) ** 2))
    worst_ratio = 0.0
    n = len(cases)
    for res, exact in cases:
        worst_ratio = max(worst_ratio, abs(res.value - exact) / res.err_estimate)
    for kind, key, params in (
        [("J", "x", m) for m in ODD_49]
        + [("I", "m", m) for m in ODD_49]
        + [("J", "x", 2 * b) for b in range(1, 21)]
        + [("LEMMA2", "q", q) for q in (0.1, 0.5, 2, 3, 10, 100)]
        + [("LEMMA3", "q", q) for q in (1e-4, 0.5, 3, 10, 1e4)]
    ):
        res = oracle(kind, {key: params})
        ref = _mp_reference(kind, params)
        worst_ratio = max(worst_ratio, float(abs(res.value - ref)) / res.err_estimate)
        n += 1
    report(9, worst_ratio <= 10, f"{n} catalog integrals, worst true error / err_estimate = {worst_ratio:.3f} (<= 10)")


def test_criterion_10_negative_control():
    quoted = cf.j_quoted_m3().value
    j3 = quad("J", x=3)
    gap = abs(quoted - j3)
    # the quoted J(2/5) reproduces the oracle only with log^2 of the golden ratio
    golden = (1 + math.sqrt(5)) / 2
    j25 = quad("J", x=0.4) - (11 * math.pi**2 / 240 + 0.75 * LOG2_SQ - 2 * math.log(golden) ** 2)
    report(10, gap > 0.06, f"quoted J(3) value {quoted:.6f} vs oracle {j3:.6f}, discrepancy {gap:.4f} "
                           f"({'> 0.06 as expected' if gap > 0.06 else 'UNEXPECTED'}); "
                           f"J(2/5) with log^2(golden ratio) off by {abs(j25):.2e}",
           informational=True)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

#!/usr/bin/env python3
"""Level-by-level convergence of the tanh-sinh rule on a few hard integrands.

Each row fixes max_level and asks for an unreachable tolerance, so the
reported value is the level's raw estimate.

    $ python scripts/quadrature_levels.py
"""

import math

from logint.funceq import PhiCase, case_integral
from logint.quadrature import QuadConfig, integrate_unit, oracle

LOG2_SQ = math.log(2) ** 2

TARGETS = [
    ("log t", lambda cfg: integrate_unit(math.log, cfg), -1.0),
    ("1/sqrt t", lambda cfg: integrate_unit(lambda t: 1 / math.sqrt(t), cfg), 2.0),
    ("J(3)", lambda cfg: oracle("J", {"x": 3}, cfg), 0.113291506110304231223910344988),
    ("J(0.1)+J(10)", lambda cfg: _sum(oracle("J", {"x": 0.1}, cfg), oracle("J", {"x": 10}, cfg)), LOG2_SQ),
    ("arcsin x=0.1", lambda cfg: _sum(case_integral(PhiCase("ARCSIN", 1, 1, 0.1), cfg),
                                      case_integral(PhiCase("ARCSIN", 1, 1, 10), cfg)), math.pi**2 / 4),
]


class _Pair:
    def __init__(self, a, b):
        self.value = a.value + b.value
        self.err_estimate = a.err_estimate + b.err_estimate
        self.evaluations = a.evaluations + b.evaluations


def _sum(a, b):
    return _Pair(a, b)


def main():
    for name, run, exact in TARGETS:
        print(f"\n{name}  (exact {exact:.17g})")
        print(f"{'level':>5} {'evals':>7} {'true error':>11} {'estimate':>10}")
        for level in range(3, 13):
            res = run(QuadConfig(1e-300, 1e-300, level))
            print(f"{level:>5} {res.evaluations:>7} {abs(res.value - exact):11.2e} {res.err_estimate:10.2e}")


if __name__ == "__main__":
    main()

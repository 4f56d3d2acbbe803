#!/usr/bin/env python3
"""Partial sums of sum_n 2^n H_n / ((2n+1) C(2n,n)), H_n = sum_{k<=n} (3/2)^k / k.

Prints the partial sum, the distance to the closed-form limit and the
geometric tail bound, and the largest term ratio seen past n = 10 (the
bound assumes it stays below 0.76; the ratios climb toward 3/4).

    $ python scripts/series_tail.py --n-max 60
"""

import argparse
from fractions import Fraction
from math import comb

from logint.funceq import central_binomial_limit, central_binomial_series


def exact_terms(n_max):
    inner = Fraction(0)
    for n in range(1, n_max + 1):
        inner += Fraction(3, 2) ** n / n
        yield 2**n * inner / ((2 * n + 1) * comb(2 * n, n))


def main():
    ap = argparse.ArgumentParser(description="central binomial series tail check")
    ap.add_argument("--n-max", type=int, default=60)
    args = ap.parse_args()

    limit = central_binomial_limit()
    print(f"limit = {limit:.17g}")
    print(f"{'n':>4} {'partial':>20} {'limit - partial':>16} {'tail bound':>12} ok")
    for n in (1, 2, 3, 5, 10, 15, 20, 30, 40, 50, 60, 100, 200):
        if n > max(args.n_max, 10) and n not in (100, 200):
            continue
        partial, bound = central_binomial_series(n)
        gap = limit - partial
        # past n ~ 90 the bound drops below the rounding error of the sum itself
        ok = "yes" if n < 10 or abs(gap) <= bound + 1e-14 else "NO"
        print(f"{n:>4} {partial:20.17f} {gap:16.3e} {bound:12.3e} {ok}")

    terms = list(exact_terms(args.n_max))
    ratios = [float(b / a) for a, b in zip(terms[9:], terms[10:])]
    print(f"\nmax term ratio for n >= 10 (exact rationals, n <= {args.n_max}): {max(ratios):.6f}")


if __name__ == "__main__":
    main()

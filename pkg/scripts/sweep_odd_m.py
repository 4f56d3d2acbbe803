#!/usr/bin/env python3
"""Closed form vs quadrature for J(m), I(m) over odd m and J(2b) over b.

    $ python scripts/sweep_odd_m.py --m-max 99
    $ python scripts/sweep_odd_m.py --m-max 49 --b-max 20 --csv sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from logint import closedform as cf
from logint.quadrature import QuadConfig, oracle


@dataclass
class SweepConfig:
    m_max: int = 49
    b_max: int = 20
    tol: float = 1e-12
    csv_path: str | None = None


def sweep(cfg: SweepConfig):
    quad = QuadConfig(cfg.tol, cfg.tol)
    rows = []
    for m in range(1, cfg.m_max + 1, 2):
        for kind, closed, name, params in (
            ("J", cf.j_odd, "J", {"x": m}),
            ("I", cf.i_odd, "I", {"m": m}),
        ):
            res = oracle(name, params, quad)
            value = closed(m).value
            rows.append((kind, m, value, res.value, abs(value - res.value), res.err_estimate, res.evaluations))
    for b in range(1, cfg.b_max + 1):
        res = oracle("J", {"x": 2 * b}, quad)
        value = cf.j_even(b).value
        rows.append(("Jeven", 2 * b, value, res.value, abs(value - res.value), res.err_estimate, res.evaluations))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-max", type=int, default=49)
    ap.add_argument("--b-max", type=int, default=20)
    ap.add_argument("--tol", type=float, default=1e-12)
    ap.add_argument("--csv", dest="csv_path")
    cfg = SweepConfig(**vars(ap.parse_args()))

    t0 = time.perf_counter()
    rows = sweep(cfg)
    elapsed = time.perf_counter() - t0

    print(f"{'kind':>6} {'m':>4} {'closed form':>22} {'abs err':>10} {'estimate':>10} {'evals':>6}")
    for kind, m, value, _, err, est, evals in rows:
        print(f"{kind:>6} {m:>4} {value:22.17f} {err:10.2e} {est:10.2e} {evals:6d}")
    worst = max(rows, key=lambda r: r[4])
    print(f"\n{len(rows)} rows in {elapsed:.2f}s; worst |closed - oracle| = {worst[4]:.2e} ({worst[0]} m={worst[1]})")

    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["kind", "m", "closed_form", "oracle", "abs_err", "err_estimate", "evaluations"])
            w.writerows(rows)
    return 0 if worst[4] <= 1e-10 else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Cover weight and biclique-count scaling, uniform vs the forced-weight
two-chain family.  Usage: python scripts/cover_weight.py [--max-exp 14]
"""

import argparse
import math
import time

from boxrig.cover import build_cover
from boxrig.lab import gen_lower_bound, gen_uniform


def row(name, n, cov, dt):
    print(f"{name:12s} n={n:7d} count/n={cov.stats.count / n:5.2f} "
          f"weight/(n log2^2 n)={cov.stats.weight / (n * math.log2(n) ** 2):6.3f} "
          f"weight/(n log2 n)={cov.stats.weight / (n * math.log2(n)):6.3f} "
          f"t={dt:6.2f}s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=14)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    for k in range(6, args.max_exp + 1):
        n = 2 ** k
        inst = gen_uniform(n, args.seed)
        t0 = time.perf_counter()
        cov = build_cover(inst.ps)
        row("uniform", n, cov, time.perf_counter() - t0)
    for k in range(8, args.max_exp + 1):
        inst = gen_lower_bound(2 ** (k - 1))
        n = inst.n
        t0 = time.perf_counter()
        cov = build_cover(inst.ps)
        row("lower-bound", n, cov, time.perf_counter() - t0)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Edge-count scaling on uniform random instances.

Measures |edges| via cover expansion counts and reports the e(n)/(n ln n)
ratio band.  Usage: python scripts/edge_scaling.py [--ns 256,...,8192] [--seeds 5]
"""

import argparse
import json
import math

from boxrig.lab import edge_count_experiment


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ns", default=",".join(str(2 ** k) for k in range(8, 14)))
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--json", default=None)
    args = ap.parse_args()
    ns = [int(v) for v in args.ns.split(",")]
    rep = edge_count_experiment(ns, range(args.seeds))
    for row in rep.rows:
        n = row["n"]
        print(f"n={n:6d} seed={row['seed']} edges={row['edges']:8d} "
              f"e/(n ln n)={row['edges'] / (n * math.log(n)):.3f}")
    print(f"band: [{rep.fitted['c1']:.3f}, {rep.fitted['c2']:.3f}] "
          f"ratio {rep.fitted['band_ratio']:.2f}  ok={rep.ok}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep.to_dict(), fh, indent=2)


if __name__ == "__main__":
    main()

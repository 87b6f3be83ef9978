#!/usr/bin/env python3
"""Largest even n with min f = f(0), for a range of odd m, written as CSV.

The boundary slope n/m is where the oracle first sees the minimum leave x = 0;
no theorem covers slopes above 0.8194, so these rows are purely empirical.

    python3 scripts/slope_scan.py --m-from 3 --m-to 121 --threads 4 > scan.csv
"""

import argparse
import csv
import sys

from trigmin.oracle import scan_slope


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-from", type=int, default=3)
    ap.add_argument("--m-to", type=int, default=81)
    ap.add_argument("--grid-density", type=float, default=1.0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    rows = scan_slope(args.m_from, args.m_to, args.grid_density, threads=args.threads)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["m", "n_max_works", "slope", "first_failure_n", "first_failure_slope"])
    for r in rows:
        ff = "" if r.first_failure_slope is None else f"{r.first_failure_slope:.6f}"
        w.writerow([r.m, r.n_max_works, f"{r.slope:.6f}", r.first_failure_n or "", ff])
    return 0


if __name__ == "__main__":
    sys.exit(main())

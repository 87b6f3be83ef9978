#!/usr/bin/env python3
"""Print every recomputed constant next to its printed value and an mpmath reference.

    python3 scripts/reproduce_constants.py            # printed precision
    python3 scripts/reproduce_constants.py --strict   # within 1e-9 of the 50-digit reference
"""

import argparse
import sys

from trigmin.constants import STRICT_TOL, constant_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strict", action="store_true")
    ap.add_argument("--max-depth", type=int, default=40)
    args = ap.parse_args()

    rows = constant_rows(args.max_depth)
    print(f"{'key':38s} {'enclosure mid':>22s} {'printed':>14s} {'tol':>9s} {'ok':>4s}")
    bad = 0
    for r in rows:
        ok = r.ok(args.strict)
        bad += not ok
        tol = float(STRICT_TOL) if args.strict else float(r.tol)
        print(f"{r.key:38s} {r.enclosure.mid:22.15g} {r.printed:>14s} {tol:9.1e} {'yes' if ok else 'NO':>4s}")
    print(f"\n{len(rows) - bad}/{len(rows)} rows ok ({'strict' if args.strict else 'printed precision'})")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

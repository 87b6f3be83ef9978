#!/usr/bin/env python3
"""How much room is left in F(lam, t, 81) >= 0 on t in [2.8, 5.78].

For each lam the floating-point minimum of F over t is printed next to the
rigorous lower bound found by the interval prover on the same range.  At
lam = 0.8194 the minimum is about 2e-4, which is why the slope bound stops
there.
"""

import argparse
import sys
from fractions import Fraction

from trigmin.certificates.common import span
from trigmin.certificates.pi_model import capital_f
from trigmin.interval import Interval
from trigmin.oracle import min_F
from trigmin.prover import prove_sign_on_interval


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lams", default="0.5,0.6,0.7,0.8,0.8194,0.82,0.83")
    ap.add_argument("--points", type=int, default=20001)
    ap.add_argument("--max-depth", type=int, default=40)
    args = ap.parse_args()

    t_box = span(Fraction("2.8"), Fraction("5.78"))
    print(f"{'lambda':>8s} {'argmin t':>9s} {'min F (float)':>15s} {'proved':>8s} {'rigorous margin':>16s}")
    for raw in args.lams.split(","):
        lam = Fraction(raw)
        t, v = min_F(float(lam), points=args.points)
        lam_iv = Interval.from_fraction(lam)
        proof = prove_sign_on_interval(lambda x: capital_f(lam_iv, x), t_box, ">0",
                                       max_depth=args.max_depth)
        margin = f"{proof.margin:.3e}" if proof.proved else "-"
        print(f"{raw:>8s} {t:9.5f} {v:15.6e} {proof.status.value:>8s} {margin:>16s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

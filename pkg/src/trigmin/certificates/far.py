"""Away from 0 and pi: g(x) >= g(0) on [5.78/m, pi - 5.78/m].

Chain replayed here:

* the lower bound ``g(x) >= -(m+n)/(m|sin x| + 1)`` rests on two algebraic
  rewrites of ``m sin nx - n sin mx + (sin nx + sin mx)/sin x <= m + n``
  (checked as identities at sample points) and on the sign of
  ``n sin x - sin nx`` and ``m sin x - sin mx`` on [0, pi] (interval proofs);
* comparing that bound with g(0) gives the region
  ``|sin x| > (m^2 - mn + n^2 - 1)/(mn(m - n))``;
* with ``sin x >= x - x^3/6`` the left end x = 5.78/m lies in that region as
  soon as ``5.78 - 5.78^3/(6m^2) >= (1 - lam + lam^2)/(lam(1 - lam))``; the
  right side increases in lam, so lam = 0.82 is the worst case.

The direct route proves ``D(x) (g(x) - g(0)) >= 0`` on the whole region.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..interval import PI, Interval, sin_enclosure
from ..model import (
    CUBIC_LOWER, LAMBDA_MAX, LAMBDA_MAX_NEAR, LAMBDA_MIN, PairMN,
    certify_sine_bound, denominator, eval_g, g_at_zero, numerator_f,
)
from ..prover import DEFAULT_MAX_DEPTH, prove_sign_on_interval
from .base import StepBuilder, StepResult
from .common import (
    I, T_FAR, excess_g, overlaps, prove_sum_nonnegative, prove_sum_on_half_period,
    sample_points, span,
)

__all__ = [
    "corollary_sides",
    "corollary_endpoint_margin",
    "region_threshold",
    "rhs_slope",
    "verify_far_region",
]

N_SAMPLES = 64


def corollary_sides(m: int, lam) -> tuple[Fraction, Fraction]:
    """Both sides of the endpoint inequality, multiplied by m."""
    lam = Fraction(lam)
    lhs = T_FAR - T_FAR ** 3 / (6 * m * m)
    rhs = (1 - lam + lam * lam) / (lam * (1 - lam))
    return lhs, rhs


def corollary_endpoint_margin(m: int, lam=LAMBDA_MAX_NEAR) -> Fraction:
    lhs, rhs = corollary_sides(m, lam)
    return lhs - rhs


def region_threshold(pair: PairMN) -> Fraction:
    m, n = pair.m, pair.n
    return Fraction(m * m - m * n + n * n - 1, m * n * (m - n))


def rhs_slope(lam: Interval) -> Interval:
    """d/dlam of (1 - lam + lam^2)/(lam(1 - lam)) = (2 lam - 1)/(lam(1 - lam))^2."""
    w = lam * (1 - lam)
    return (2 * lam - 1) / w.sqr()


def _rewrites(m: int, n: int, x: float):
    s = sin_enclosure(Interval.point(x))
    sn = sin_enclosure(Interval.point(x) * n)
    sm = sin_enclosure(Interval.point(x) * m)
    inv = 1 / s
    lhs = m * sn - n * sm + sn * inv + sm * inv
    first = (m + n) - (m + inv) * (n * s - sn) - (inv - n) * (m * s - sm)
    second = (m + inv) * sn - (n - inv) * sm
    # (m + n) - lhs times m sin x equals D(x) (g(x) + (m+n)/(m sin x + 1)) (m sin x + 1)
    scaled = ((n * sm - m * sn) * (m * s + 1) + (m + n) * (m * s - sm)) / (m * s)
    return lhs, first, second, scaled


def verify_far_region(pair: PairMN, max_depth: int = DEFAULT_MAX_DEPTH, seed: int = 0) -> StepResult:
    pair.require_scope()
    m, n = pair.m, pair.n
    b = StepBuilder("far_region")
    b.param("lambda_range", f"[{LAMBDA_MIN}, {LAMBDA_MAX_NEAR}]")
    b.param("lambda_range_theorem", f"[{LAMBDA_MIN}, {LAMBDA_MAX}]")
    b.param("region", "[5.78/m, pi - 5.78/m]")
    b.param("seed", seed)

    # (i) identity sanity for the two rewrites and the equivalence with the lower bound
    bad_identity = bad_bound = 0
    for x in sample_points(seed, 1e-3, math.pi - 1e-3, N_SAMPLES):
        lhs, first, second, scaled = _rewrites(m, n, x)
        if not overlaps(lhs, first):
            bad_identity += 1
        if not overlaps(m + n - lhs, scaled):
            bad_identity += 1
        if math.sin(x) >= 1 / n and not overlaps(lhs, second):
            bad_identity += 1
        s = sin_enclosure(Interval.point(x))
        if eval_g(pair, Interval.point(x)).hi < (-(m + n) / (m * s + 1)).lo:
            bad_bound += 1
    b.exact("rewrite_identities_at_samples", Fraction(bad_identity), "==")
    b.exact("lower_bound_at_samples", Fraction(bad_bound), "==")

    # (ii) the two sign facts the first rewrite relies on
    for name, s in (("n_sin_x_minus_sin_nx_nonneg", numerator_f(pair)),
                    ("m_sin_x_minus_sin_mx_nonneg", denominator(pair))):
        left, right = prove_sum_on_half_period(s, max_depth)
        b.sign(name + "_first_half", left)
        b.sign(name + "_second_half", right)

    # region (4)
    thr = region_threshold(pair)
    b.value("region_threshold", I(thr))
    b.exact("region_threshold_positive", thr, ">")
    b.exact("region_threshold_below_one", thr, "<", Fraction(1))

    # (iii) corollary endpoint at lam = 0.82 for this m
    lhs, rhs = corollary_sides(m, LAMBDA_MAX_NEAR)
    b.value("corollary_lhs_times_m", I(lhs))
    b.value("corollary_rhs_times_m_at_0.82", I(rhs))
    b.exact("corollary_endpoint", lhs, ">", rhs)
    # the sides used above bound the ones for this pair's own slope
    b.exact("pair_slope_within_0.82", pair.lam, "<=", LAMBDA_MAX_NEAR)
    b.exact("pair_region_implied", (1 - pair.lam + pair.lam ** 2) / (pair.lam * (1 - pair.lam)),
            "<=", rhs)
    # the slope of the right side is (2 lam - 1)/(lam (1 - lam))^2, zero at lam = 1/2
    b.sign("rhs_nondecreasing_in_lambda",
           prove_sign_on_interval(rhs_slope, span(I(LAMBDA_MIN), I(LAMBDA_MAX_NEAR)), ">=0",
                                  max_depth=max_depth))
    b.sign("cubic_sine_lower_bound", certify_sine_bound(CUBIC_LOWER, max_depth))
    # 5.78/m - (5.78/m)^3/6 is exactly lhs/m, and the threshold (4) sits below rhs/m
    b.exact("threshold_below_rhs", thr * m, "<", rhs)

    # direct route: D (g - g0) >= 0 across the whole region
    region = span(I(T_FAR / m), PI - I(T_FAR / m))
    b.sign("direct_excess_nonneg", prove_sum_nonnegative(excess_g(pair), region, max_depth))
    b.value("g_at_zero", I(g_at_zero(pair)))
    return b.result()

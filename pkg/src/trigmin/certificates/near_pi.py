"""Neighbourhood of pi: g(pi + x) >= g(0) for x in [0, 2.8/m] and [2.8/m, 5.78/m].

Write g~(x) = g(x + pi) = (n sin mx + m sin nx)/(m sin x - sin mx).

Inner part, sandwich x - x^3/6 <= sin x <= x - x^3/6 + x^5/120.  With
y = (mx)^2, u = 1/m^2 the two conditions become

    1/6 - y/120 - u/6 >= 0                                   (y <= 2.8^2)
    G(lam, y, u) = 2 - lam^2 y/3 - (1 - lam^2) y^2/(120 (1 - u)) >= 0

with partial derivatives

    G_u   = -(1 - lam^2) y^2 / (120 (1 - u)^2)
    G_y   = -lam^2/3 - (1 - lam^2) y / (60 (1 - u))
    G_lam = 2 lam y (y/(120 (1 - u)) - 1/3)

all <= 0 on the box, so the corner (lam, y, m) = (0.82, 2.8^2, 3) is the worst.

Outer part, quartic/quadratic sandwich around 3pi/2 (see ``pi_model``).  In
t = mx the denominator condition is v(t) >= 0 with v'' = -1 - u t and v
decreasing in u; the final inequality is F(lam, t, m) >= 0, F increasing in m
because F_u carries the sign of p(t) = t - t^3/6 + 1 - (t - 3pi/2)^2/2 < 0.
"""

from __future__ import annotations

from fractions import Fraction

from ..interval import Interval
from ..model import (
    CUBIC_LOWER, LAMBDA_MAX, LAMBDA_MAX_NEAR, LAMBDA_MIN, M_MIN, PairMN, QUADRATIC_UPPER,
    QUARTIC_LOWER, QUINTIC_UPPER, certify_sine_bound, g_at_zero,
)
from ..prover import DEFAULT_MAX_DEPTH, prove_sign_on_box, prove_sign_on_interval
from .base import StepBuilder, StepResult
from .common import (
    I, T_FAR, T_MID, excess_g_tilde, overlaps, prove_sum_nonnegative, sample_points, span,
    three_pi_over_two,
)
from .pi_model import capital_f, f_u, p_curv, p_fn, p_slope, quartic_sine, v_fn, v_tt, v_u

__all__ = [
    "g_small",
    "g_small_exact",
    "dg_du",
    "dg_dy",
    "dg_dlam",
    "verify_near_pi_small",
    "verify_near_pi_large",
]

Y_MID = T_MID ** 2
U3 = Fraction(1, 9)  # u = 1/m^2 at m = 3
U5 = Fraction(1, 25)


def g_small(lam: Interval, y: Interval, u: Interval) -> Interval:
    lam2 = lam.sqr()
    return 2 - lam2 * y / 3 - (1 - lam2) * y.sqr() / (120 * (1 - u))


def g_small_exact(lam, y, m: int) -> Fraction:
    lam, y = Fraction(lam), Fraction(y)
    m2 = m * m
    return 2 - lam * lam * y / 3 - (1 - lam * lam) * m2 * y * y / (120 * (m2 - 1))


def dg_du(lam: Interval, y: Interval, u: Interval) -> Interval:
    return -(1 - lam.sqr()) * y.sqr() / (120 * (1 - u).sqr())


def dg_dy(lam: Interval, y: Interval, u: Interval) -> Interval:
    lam2 = lam.sqr()
    return -lam2 / 3 - (1 - lam2) * y / (60 * (1 - u))


def dg_dlam(lam: Interval, y: Interval, u: Interval) -> Interval:
    return 2 * lam * y * (y / (120 * (1 - u)) - I(Fraction(1, 3)))


def _cubic(x: Fraction) -> Fraction:
    return x - x ** 3 / 6


def _quintic(x: Fraction) -> Fraction:
    return x - x ** 3 / 6 + x ** 5 / 120


def _small_identity_defect(pair: PairMN, x: Fraction) -> Fraction:
    """Exact difference between the reduced form and G at a rational point."""
    m, n = pair.m, pair.n
    lhs = n * _cubic(m * x) + m * _cubic(n * x) - g_at_zero(pair) * (m * _cubic(x) - _quintic(m * x))
    return lhs / (m * n * x) - g_small_exact(pair.lam, (m * x) ** 2, m)


def verify_near_pi_small(pair: PairMN, max_depth: int = DEFAULT_MAX_DEPTH, seed: int = 0) -> StepResult:
    if pair.m < 3:
        raise ValueError("the inner neighbourhood of pi needs m >= 3")
    m = pair.m
    b = StepBuilder("near_pi_small")
    b.param("lambda_range", f"[0, {LAMBDA_MAX_NEAR}]")
    b.param("lambda_range_theorem", f"[{LAMBDA_MIN}, {LAMBDA_MAX}]")
    b.param("m_range", "m >= 3")
    b.param("region", "pi + [0, 2.8/m] (g is even about pi)")

    b.sign("cubic_below_sin", certify_sine_bound(CUBIC_LOWER, max_depth))
    b.sign("quintic_above_sin", certify_sine_bound(QUINTIC_UPPER, max_depth))

    # condition (6): linear in y, increasing in m
    cond6 = Fraction(1, 6) - Y_MID / 120 - U3 / 6
    b.value("cond6_worst", I(cond6))
    b.exact("cond6_worst_case", cond6, ">")
    b.exact("cond6_pair", Fraction(1, 6) - Y_MID / 120 - Fraction(1, 6 * m * m), ">")

    # reduced inequality G >= 0 and its monotonicity on the box
    lam_box = span(0, I(LAMBDA_MAX_NEAR))
    y_box = span(0, I(Y_MID))
    u_box = span(0, I(U3))
    box = (lam_box, y_box, u_box)
    b.sign("G_nonincreasing_in_u", prove_sign_on_box(dg_du, box, "<=0", max_depth=max_depth))
    b.sign("G_nonincreasing_in_y", prove_sign_on_box(dg_dy, box, "<=0", max_depth=max_depth))
    b.sign("G_nonincreasing_in_lambda", prove_sign_on_box(dg_dlam, box, "<=0", max_depth=max_depth))
    corner = g_small_exact(LAMBDA_MAX_NEAR, Y_MID, 3)
    b.value("G_corner", I(corner))
    b.exact("G_corner_positive", corner, ">")
    b.exact("G_lambda_zero", g_small_exact(0, Y_MID, 3), ">")
    b.sign("G_positive_box", prove_sign_on_box(g_small, box, ">0", max_depth=max_depth))
    b.exact("G_pair_corner", g_small_exact(pair.lam, Y_MID, m), ">=", corner)

    # the reduction is an exact polynomial identity: sample it at rational points
    defects = 0
    for x in sample_points(seed, 1e-4, float(T_MID) / m, 16):
        if _small_identity_defect(pair, Fraction(x)) != 0:
            defects += 1
    b.exact("reduction_identity_at_samples", Fraction(defects), "==")

    b.sign("direct_excess_nonneg",
           prove_sum_nonnegative(excess_g_tilde(pair), span(0, I(T_MID / m)), max_depth))
    return b.result()


def _large_identity_overlap(pair: PairMN, x: float) -> bool:
    m, n = pair.m, pair.n
    xi = Interval.point(x)
    t = xi * m
    g0 = I(g_at_zero(pair))
    lhs = (n * quartic_sine(t) + m * quartic_sine(xi * n)
           - g0 * (m * (xi - xi ** 3 / 6) - (-1 + (t - three_pi_over_two()).sqr() / 2)))
    return overlaps(lhs / m, capital_f(I(pair.lam), t, I(Fraction(1, m * m))))


def verify_near_pi_large(pair: PairMN, max_depth: int = DEFAULT_MAX_DEPTH, seed: int = 0) -> StepResult:
    pair.require_scope()
    m = pair.m
    b = StepBuilder("near_pi_large")
    b.param("lambda_range", f"[{LAMBDA_MIN}, {LAMBDA_MAX}]")
    b.param("m_range", "m >= 81 (denominator condition: m >= 5)")
    b.param("region", "pi + [2.8/m, 5.78/m]")

    b.sign("quartic_below_sin", certify_sine_bound(QUARTIC_LOWER, max_depth))
    b.sign("quadratic_above_sin", certify_sine_bound(QUADRATIC_UPPER, max_depth))
    b.sign("cubic_below_sin", certify_sine_bound(CUBIC_LOWER, max_depth))

    t_box = span(I(T_MID), I(T_FAR))
    u5_box = span(0, I(U5))
    # denominator condition v(t) >= 0 for m >= 5
    b.sign("v_concave", prove_sign_on_box(v_tt, (t_box, u5_box), "<0", max_depth=max_depth))
    b.sign("v_increasing_in_m", prove_sign_on_box(v_u, (t_box, u5_box), "<0", max_depth=max_depth))
    v_lo = b.paper("v_28_m5", v_fn(I(T_MID), I(U5)), "1.825")
    v_hi = b.paper("v_578_m5", v_fn(I(T_FAR), I(U5)), "4.9228")
    b.compare("v_28_positive", v_lo, ">")
    b.compare("v_578_positive", v_hi, ">")

    # F increasing in m: sign of p on [2.8, 5.78]
    b.sign("p_slope_decreasing", prove_sign_on_interval(p_curv, t_box, "<0", max_depth=max_depth))
    ps = b.paper("p_slope_28", p_slope(I(T_MID)), "-1.0076")
    b.compare("p_slope_28_negative", ps, "<")
    p28 = b.paper("p_28", p_fn(I(T_MID)), "-1.6873")
    b.compare("p_28_negative", p28, "<")
    b.sign("p_negative_direct", prove_sign_on_interval(p_fn, t_box, "<0", max_depth=max_depth))
    lam_box = span(I(LAMBDA_MIN), I(LAMBDA_MAX))
    b.sign("F_decreasing_in_u",
           prove_sign_on_box(f_u, (lam_box, t_box, span(0, I(Fraction(1, M_MIN ** 2)))), "<0",
                             max_depth=max_depth))
    b.exact("pair_u_within_m81", Fraction(1, m * m), "<=", Fraction(1, M_MIN ** 2))

    # the reduction to F, sampled in interval arithmetic
    bad = sum(not _large_identity_overlap(pair, x)
              for x in sample_points(seed, float(T_MID) / m, float(T_FAR) / m, 16))
    b.exact("reduction_identity_at_samples", Fraction(bad), "==")

    # F(lam, t, 81) >= 0 is delegated to the appendix lemmas; here the pair's own F
    u = I(Fraction(1, m * m))
    lam = I(pair.lam)
    b.sign("F_pair_positive",
           prove_sign_on_interval(lambda t: capital_f(lam, t, u), t_box, ">0", max_depth=max_depth))
    b.sign("direct_excess_nonneg",
           prove_sum_nonnegative(excess_g_tilde(pair), span(I(T_MID / m), I(T_FAR / m)), max_depth))
    return b.result()


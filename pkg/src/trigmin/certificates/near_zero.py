"""Neighbourhood of 0: g(x) >= g(0) on [0, 5.78/m].

With the degree-9 sandwich s1 <= sin <= s2 on [0, 5.78] three conditions are
checked, all in the variable y = (mx)^2 in [0, 5.78^2]:

* the sandwich itself (interval proofs of sin - s1 >= 0 and sin - s2 <= 0),
  together with the constants of the classical argument for s1 (a = 9!/482800,
  arccos(a), 2 pi - arccos(a), 1/a and the gap sin - s1 at 5.78);
* m s1(x) - s2(mx) >= 0, i.e. P(y) - Q(y) >= 0 with P, Q decreasing cubics;
* the bound ratio is >= g(0), i.e. Phi_m(y) + Psi_lam(y) >= 0, reduced to the
  concave one-variable function V(nu), nu = lam^2 in [0.25, 0.82^2].

Derivative formulas used below (checked against a computer algebra system in
the test-suite):

    P'(y)    = -(y^2/24 - 2y + 42)/7!
    Q'(y)    = -(3*7!/(482800 m^2) y^2 - 2y + 42 m^2)/(7! m^6)
    Psi'(y)  = 2/(9!(1-nu)) [(a - 1 + nu - nu^4) y - 36 nu (1 - nu^2)]
    u(nu)    = (a - 1) 5.78^2 + 36 nu^3 - 5.78^2 nu^4,   u'(nu) = nu^2 (108 - 4*5.78^2 nu)
    V''(nu)  = -12*5.78^4/9! nu^2 + 6*5.78^2/7! nu - 2/5!
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..interval import PI, Interval, arccos_enclosure
from ..model import (
    LAMBDA_MAX, LAMBDA_MAX_NEAR, LAMBDA_MIN, NEAR_ZERO_LOWER, NEAR_ZERO_UPPER, PairMN,
    certify_sine_bound,
)
from ..poly import PolyCoeffs, horner_eval
from ..prover import DEFAULT_MAX_DEPTH, prove_sign_on_box, prove_sign_on_interval
from .base import StepBuilder, StepResult
from .common import I, T_FAR, excess_g, prove_sum_nonnegative, span

__all__ = [
    "A_CONST",
    "PHI_FLOOR",
    "p_poly",
    "q_poly",
    "phi_poly",
    "psi_poly",
    "psi_slope_bracket",
    "u_poly",
    "v_poly",
    "verify_near_zero",
]

F = math.factorial
A_CONST = Fraction(F(9), 482800)
PHI_FLOOR = Fraction("-1.74e-6")
Y_MAX = T_FAR ** 2
NU_MIN = LAMBDA_MIN ** 2
NU_MAX = LAMBDA_MAX_NEAR ** 2


def p_poly() -> PolyCoeffs:
    return PolyCoeffs.of(Fraction(1, 6), Fraction(-1, 120), Fraction(1, F(7)), Fraction(-1, F(9)))


def q_poly(m: int) -> PolyCoeffs:
    m2 = Fraction(m * m)
    return PolyCoeffs.of(1 / (6 * m2), -1 / (120 * m2 ** 2), 1 / (F(7) * m2 ** 3),
                         -1 / (482800 * m2 ** 4))


def phi_poly(m: int) -> PolyCoeffs:
    """The m-dependent part Phi_m(y) of the final inequality."""
    m2 = Fraction(m * m)
    quad = (Fraction(1, 482800) / m2 ** 3 - Fraction(1, F(9))) / (m2 - 1)
    return PolyCoeffs.of(-1 / (120 * m2), (m2 + 1) / (F(7) * m2 ** 2), quad)


def psi_poly(nu: Fraction) -> PolyCoeffs:
    """The slope-dependent part Psi(y) for nu = lam^2 (exact)."""
    nu = Fraction(nu)
    quad = (Fraction(1, 482800) - (nu ** 4 - nu + 1) / F(9)) / (1 - nu)
    return PolyCoeffs.of(nu / 120, -nu * (1 + nu) / F(7), quad)


def psi_slope_bracket(nu: Interval, y: Interval) -> Interval:
    """(a - 1 + nu - nu^4) y - 36 nu (1 - nu^2): Psi'(y) up to a positive factor."""
    return (I(A_CONST) - 1 + nu - nu ** 4) * y - 36 * nu * (1 - nu.sqr())


def u_poly() -> PolyCoeffs:
    return PolyCoeffs.of((A_CONST - 1) * Y_MAX, 0, 0, 36, -Y_MAX)


def v_poly() -> PolyCoeffs:
    """V(nu) = Psi(5.78^2) (1 - nu) - 1.74e-6 (1 - nu), expanded in nu."""
    y2, y4 = Y_MAX, Y_MAX ** 2
    a = A_CONST
    # (a - 1 + nu - nu^4) y4/9! - (nu - nu^3) y2/7! + (nu - nu^2)/5! + PHI_FLOOR (1 - nu)
    c0 = (a - 1) * y4 / F(9) + PHI_FLOOR
    c1 = y4 / F(9) - y2 / F(7) + Fraction(1, 120) - PHI_FLOOR
    c2 = Fraction(-1, 120)
    c3 = y2 / F(7)
    c4 = -y4 / F(9)
    return PolyCoeffs.of(c0, c1, c2, c3, c4)


def verify_near_zero(pair: PairMN, max_depth: int = DEFAULT_MAX_DEPTH, seed: int = 0) -> StepResult:
    pair.require_scope()
    m = pair.m
    b = StepBuilder("near_zero")
    b.param("lambda_range", f"[{LAMBDA_MIN}, {LAMBDA_MAX_NEAR}]")
    b.param("lambda_range_theorem", f"[{LAMBDA_MIN}, {LAMBDA_MAX}]")
    b.param("region", "[0, 5.78/m]")

    # condition (5): the sandwich on [0, 5.78]
    b.sign("s1_below_sin", certify_sine_bound(NEAR_ZERO_LOWER, max_depth))
    b.sign("s2_above_sin", certify_sine_bound(NEAR_ZERO_UPPER, max_depth))
    a = I(A_CONST)
    x1 = arccos_enclosure(A_CONST)
    b.paper("a", a, "0.7516")
    b.paper("x1", x1, "0.7203")
    b.paper("x2", 2 * PI - x1, "5.5629")
    b.paper("inv_a", 1 / a, "1.3305")
    phi578 = NEAR_ZERO_LOWER.gap(I(T_FAR))
    b.paper("phi_578", phi578, "0.0104")
    b.compare("phi_578_positive", phi578, ">")
    b.exact("a_below_one", A_CONST, "<", Fraction(1))

    # condition (6): P(y) - Q(y) >= 0 on [0, 5.78^2]
    p, q = p_poly(), q_poly(m)
    inner = PolyCoeffs.of(42, -2, Fraction(1, 24))
    b.exact("p_slope_identity", Fraction(int(p.derivative() == inner * Fraction(-1, F(7)))), "==", 1)
    b.exact("p_slope_discriminant", inner.discriminant(), "<")
    q_inner = PolyCoeffs.of(42 * m * m, -2, Fraction(3 * F(7), 482800 * m * m))
    b.exact("q_slope_identity",
            Fraction(int(q.derivative() == q_inner * Fraction(-1, F(7) * m ** 6))), "==", 1)
    b.exact("q_slope_discriminant", q_inner.discriminant(), "<")
    b.paper("p_at_578sq", horner_eval(p, I(Y_MAX)), "6.9607e-3")
    b.exact("p_min_exceeds_q_max", p(Y_MAX), ">", q(0))
    b.exact("paper_bound_at_m5", Fraction("6.96e-3"), ">", Fraction(1, 6 * 25))
    b.sign("p_minus_q_direct",
           prove_sign_on_interval(lambda y: horner_eval(p - q, y), span(0, I(Y_MAX)), ">0",
                                  max_depth=max_depth))

    # condition (7): Phi_m + Psi >= 0
    phi81 = -Y_MAX ** 2 / (F(9) * (81 * 81 - 1)) - Fraction(1, 120 * 81 * 81)
    b.paper("phi_bound", I(phi81), "-1.74e-6")
    b.exact("phi_bound_above_floor", phi81, ">", PHI_FLOOR)
    phim = -Y_MAX ** 2 / (F(9) * (m * m - 1)) - Fraction(1, 120 * m * m)
    b.exact("phi_bound_pair_m", phim, ">=", phi81)
    b.sign("phi_above_floor_direct",
           prove_sign_on_interval(lambda y: horner_eval(phi_poly(m), y) - I(PHI_FLOOR),
                                  span(0, I(Y_MAX)), ">0", max_depth=max_depth))

    # Psi decreasing: u(nu) < 0 from its critical points
    u = u_poly()
    b.exact("u_leading_negative", u[4], "<")
    crit = Fraction(27) / Y_MAX
    b.exact("u_slope_identity",
            Fraction(int(u.derivative() == PolyCoeffs.of(0, 0, 108, -4 * Y_MAX))), "==", 1)
    b.exact("u_at_0", u(0), "<")
    b.exact("u_at_critical", u(crit), "<")
    b.exact("y_max_below_36", Y_MAX, "<", Fraction(36))
    nu_box = span(I(NU_MIN), I(NU_MAX))
    y_box = span(0, I(Y_MAX))
    b.sign("psi_decreasing_box",
           prove_sign_on_box(psi_slope_bracket, (nu_box, y_box), "<0", max_depth=max_depth))

    # V concave with positive endpoint values
    v = v_poly()
    v2 = v.derivative().derivative()
    v2_expected = PolyCoeffs.of(Fraction(-2, 120), 6 * Y_MAX / F(7), -12 * Y_MAX ** 2 / F(9))
    b.exact("v_second_derivative_identity", Fraction(int(v2 == v2_expected)), "==", 1)
    b.exact("v_second_derivative_discriminant", v2.discriminant(), "<")
    b.exact("v_second_derivative_leading", v2[2], "<")
    b.sign("v_concave",
           prove_sign_on_interval(lambda t: horner_eval(v2, t), nu_box, "<0", max_depth=max_depth))
    b.paper("V_025", horner_eval(v, I(NU_MIN)), "5.5947e-7")
    b.paper("V_06724", horner_eval(v, I(NU_MAX)), "6.857e-5")
    b.exact("V_endpoint_low", v(NU_MIN), ">")
    b.exact("V_endpoint_high", v(NU_MAX), ">")
    # V(nu) / (1 - nu) + 1.74e-6 is Psi(5.78^2): tie V to the definition of Psi at an exact nu
    nu_t = Fraction(1, 3)
    b.exact("v_matches_psi", v(nu_t) / (1 - nu_t) - PHI_FLOOR, "==", psi_poly(nu_t)(Y_MAX))

    # pair-specific closure and the direct route
    nu = pair.nu
    b.sign("phi_plus_psi_pair",
           prove_sign_on_interval(lambda y: horner_eval(phi_poly(m) + psi_poly(nu), y),
                                  span(0, I(Y_MAX)), ">0", max_depth=max_depth))
    b.sign("direct_excess_nonneg",
           prove_sum_nonnegative(excess_g(pair), span(0, I(T_FAR / m)), max_depth))
    return b.result()

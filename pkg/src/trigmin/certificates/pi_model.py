"""F(lam, t, m) near pi and its hand-derived partial derivatives.

Notation: c = 3 pi/2, A = t - c, B = lam t - c, u = 1/m^2, K = 1/(1 - u)
(so that 1 + 1/(m^2 - 1) = K), and

    s(x)   = -1 + (x - c)^2/2 - (x - c)^4/24         quartic lower bound of sin
    P(t)   = t - u t^3/6 + 1 - A^2/2
    F      = lam s(t) + s(lam t) + lam (1 - lam^2) K P(t)

Derivatives (verified symbolically in the test-suite):

    F_u       = lam (1 - lam^2) K^2 (t - t^3/6 + 1 - A^2/2)
    F_lam     = s(t) + t (B - B^3/6) + (1 - 3 lam^2) K P(t)
    F_lamlam  = t^2 (1 - B^2/2) - 6 lam K P(t)
    F_lam^3   = -t^3 B - 6 K P(t)
    F_tt      = lam (1 - A^2/2) + lam^2 (1 - B^2/2) - lam (1 - lam^2) K (1 + u t)

Every function accepts intervals (or anything ``as_interval`` understands) and
returns an enclosure.  At m = 81 the two m-dependent factors become
K = 1 + 1/6560 and u t^3/6 = t^3/39366.
"""

from __future__ import annotations

from fractions import Fraction

from ..interval import Interval, as_interval
from .common import three_pi_over_two

__all__ = [
    "U81",
    "quartic_sine",
    "big_p",
    "capital_f",
    "f_u",
    "f_lam",
    "f_lamlam",
    "f_lamlamlam",
    "f_tt",
    "v_fn",
    "v_tt",
    "v_u",
    "p_fn",
    "p_slope",
    "p_curv",
]

U81 = Fraction(1, 81 * 81)


def _k(u: Interval) -> Interval:
    return 1 / (1 - u)


def quartic_sine(x) -> Interval:
    a = as_interval(x) - three_pi_over_two()
    a2 = a.sqr()
    return -1 + a2 / 2 - a2.sqr() / 24


def big_p(t, u) -> Interval:
    t, u = as_interval(t), as_interval(u)
    a = t - three_pi_over_two()
    return t - u * t ** 3 / 6 + 1 - a.sqr() / 2


def capital_f(lam, t, u=U81) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    return (lam * quartic_sine(t) + quartic_sine(lam * t)
            + lam * (1 - lam.sqr()) * _k(u) * big_p(t, u))


def p_fn(t) -> Interval:
    """t - t^3/6 + 1 - (t - 3pi/2)^2/2, the sign-carrying factor of F_u."""
    t = as_interval(t)
    return t - t ** 3 / 6 + 1 - (t - three_pi_over_two()).sqr() / 2


def p_slope(t) -> Interval:
    t = as_interval(t)
    return 1 + three_pi_over_two() - t - t.sqr() / 2


def p_curv(t) -> Interval:
    return -1 - as_interval(t)


def f_u(lam, t, u) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    return lam * (1 - lam.sqr()) * _k(u).sqr() * p_fn(t)


def f_lam(lam, t, u=U81) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    b = lam * t - three_pi_over_two()
    return quartic_sine(t) + t * (b - b ** 3 / 6) + (1 - 3 * lam.sqr()) * _k(u) * big_p(t, u)


def f_lamlam(lam, t, u=U81) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    b = lam * t - three_pi_over_two()
    return t.sqr() * (1 - b.sqr() / 2) - 6 * lam * _k(u) * big_p(t, u)


def f_lamlamlam(lam, t, u=U81) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    b = lam * t - three_pi_over_two()
    return -(t ** 3) * b - 6 * _k(u) * big_p(t, u)


def f_tt(lam, t, u=U81) -> Interval:
    lam, t, u = as_interval(lam), as_interval(t), as_interval(u)
    a = t - three_pi_over_two()
    b = lam * t - three_pi_over_two()
    return (lam * (1 - a.sqr() / 2) + lam.sqr() * (1 - b.sqr() / 2)
            - lam * (1 - lam.sqr()) * _k(u) * (1 + u * t))


def v_fn(t, u) -> Interval:
    """m(x - x^3/6) - s2(mx) in the variable t = mx: 1 + t - (t - 3pi/2)^2/2 - u t^3/6."""
    t, u = as_interval(t), as_interval(u)
    return 1 + t - (t - three_pi_over_two()).sqr() / 2 - u * t ** 3 / 6


def v_tt(t, u) -> Interval:
    return -1 - as_interval(u) * as_interval(t)


def v_u(t, u) -> Interval:
    return -(as_interval(t) ** 3) / 6

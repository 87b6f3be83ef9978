"""High-precision reference values for the constant table, written directly in mpmath.

These formulas are deliberately independent of the interval code: each
quantity is spelled out from its definition and evaluated at 50 digits.  The
strict mode of the constant table compares every enclosure against these.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

__all__ = ["DIGITS", "reference_values", "reference_value"]

DIGITS = 50


def _q(s) -> mpf:
    """Exact decimal or rational literal as an mpf."""
    f = Fraction(s)
    return mpf(f.numerator) / f.denominator


def _table() -> dict[str, mpf]:
    pi = mp.pi
    c = 3 * pi / 2
    t28, t5, t578 = _q("2.8"), mpf(5), _q("5.78")
    fact = math.factorial
    out: dict[str, mpf] = {}

    # neighbourhood of 0
    a = mpf(fact(9)) / 482800
    out["near_zero:a"] = a
    out["near_zero:x1"] = mpmath.acos(a)
    out["near_zero:x2"] = 2 * pi - mpmath.acos(a)
    out["near_zero:inv_a"] = 1 / a
    x = t578
    s1 = x - x ** 3 / 6 + x ** 5 / 120 - x ** 7 / 5040 + x ** 9 / 482800
    out["near_zero:phi_578"] = mpmath.sin(x) - s1
    y = t578 ** 2
    out["near_zero:p_at_578sq"] = mpf(1) / 6 - y / 120 + y ** 2 / 5040 - y ** 3 / fact(9)
    out["near_zero:phi_bound"] = -(y ** 2) / (fact(9) * (81 ** 2 - 1)) - mpf(1) / (120 * 81 ** 2)

    def big_v(nu):
        # (1 - nu) (Psi_nu(5.78^2) - 1.74e-6)
        psi = (nu / 120 - nu * (1 + nu) / 5040 * y
               + (mpf(1) / 482800 - (nu ** 4 - nu + 1) / fact(9)) / (1 - nu) * y ** 2)
        return (1 - nu) * (psi - _q("1.74e-6"))

    out["near_zero:V_025"] = big_v(_q("0.25"))
    out["near_zero:V_06724"] = big_v(_q("0.6724"))

    # neighbourhood of pi, outer part
    def v(t, u):
        return 1 + t - (t - c) ** 2 / 2 - u * t ** 3 / 6

    out["near_pi_large:v_28_m5"] = v(t28, mpf(1) / 25)
    out["near_pi_large:v_578_m5"] = v(t578, mpf(1) / 25)
    out["near_pi_large:p_slope_28"] = 1 + c - t28 - t28 ** 2 / 2
    out["near_pi_large:p_28"] = t28 - t28 ** 3 / 6 + 1 - (t28 - c) ** 2 / 2

    # m = 81 lemmas
    k = 1 + mpf(1) / 6560

    def lemma1_p(t):
        return -(t ** 3) * (_q("0.82") * t - c) - 36 * k

    def lemma1_q(t):
        return t ** 2 - _q("4.92") * k * (t + 1 - (t - c) ** 2 / 2) + _q("0.016")

    out["appendix_Fll:p_critical_point"] = 9 * pi / _q("6.56")
    out["appendix_Fll:p_28"] = lemma1_p(t28)
    out["appendix_Fll:p_5"] = lemma1_p(t5)
    out["appendix_Fll:q_28"] = lemma1_q(t28)
    out["appendix_Fll:q_5"] = lemma1_q(t5)

    z = _q("1.1")
    out["appendix_Fl:quartic_at_1.1"] = -1 + z ** 2 / 2 - z ** 4 / 24

    def parab(t):
        return t + 1 - (t - c) ** 2 / 2

    def psi_u(u):
        return (u + c) * (u - u ** 3 / 6)

    out["appendix_Fl:parabola_5"] = parab(t5)
    out["appendix_Fl:parabola_578"] = parab(t578)
    out["appendix_Fl:psi_0.028"] = psi_u(_q("0.028"))
    out["appendix_Fl:psi_-2.213"] = psi_u(_q("-2.213"))
    out["appendix_Fl:psi_-1.375"] = psi_u(_q("-1.375"))
    out["appendix_Fl:bound_psi_positive"] = (_q("0.133") + _q("0.815") * _q("5.95")
                                             * (1 - 3 * _q("0.815") ** 2))
    out["appendix_Fl:bound_small_lambda"] = _q("-1.016") + _q("3.11") * (1 - _q("0.75"))

    def s(xx):
        d = xx - c
        return -1 + d ** 2 / 2 - d ** 4 / 24

    def big_f(lam, t, m=81):
        big_p = t - t ** 3 / (6 * m * m) + 1 - (t - c) ** 2 / 2
        return lam * s(t) + s(lam * t) + lam * (1 - lam ** 2) * m * m / (m * m - 1) * big_p

    out["appendix_F_half:F_half_28"] = big_f(mpf("0.5"), t28)
    out["appendix_F_half:F_half_5"] = big_f(mpf("0.5"), t5)

    lam = _q("0.8194")
    d = lam * (1 - lam ** 2) * k
    # phi(t) = lam (t - c)^2/2 + (lam t - c)^2/2 + d (t + 1), collected in t
    qa = lam / 2 + lam ** 2 / 2
    qb = -lam * c - lam * c + d
    qc = lam * c ** 2 / 2 + c ** 2 / 2 + d
    out["appendix_F_08194:a"] = qa
    out["appendix_F_08194:b"] = qb
    out["appendix_F_08194:c"] = qc
    lines = [("-1.5", "8.5"), ("-0.45", "4.02"), ("0.025", "1.71372"),
             ("0.077", "1.4519"), ("0.2", "0.8256"), ("1", "-3.5")]
    for i, (bs, cs) in enumerate(lines, start=1):
        out[f"appendix_F_08194:Delta_{i}"] = (qb - _q(bs)) ** 2 - 4 * qa * (qc - _q(cs))
    ts = [_q("2.8")]
    for (b0, c0), (b1, c1) in zip(lines, lines[1:]):
        ts.append((_q(c1) - _q(c0)) / (_q(b0) - _q(b1)))
    ts.append(t578)

    def psi_t(t):
        a2 = (t - c) ** 2
        b2 = (lam * t - c) ** 2
        return lam * (1 + a2 ** 2 / 24) + 1 + b2 ** 2 / 24 + d * (t ** 3 / 39366 + a2 / 2)

    for i, t in enumerate(ts, start=1):
        out[f"appendix_F_08194:t_{i}"] = t
        bs, cs = lines[min(i, 6) - 1]
        out[f"appendix_F_08194:L{i}_t{i}"] = _q(bs) * t + _q(cs)
        out[f"appendix_F_08194:psi_t{i}"] = psi_t(t)
    return out


_CACHE: dict[str, mpf] | None = None


def reference_values() -> dict[str, mpf]:
    """``step_id:name`` -> 50-digit value."""
    global _CACHE
    if _CACHE is None:
        with mp.workdps(DIGITS):
            _CACHE = _table()
    return _CACHE


def reference_value(key: str) -> mpf:
    return reference_values()[key]

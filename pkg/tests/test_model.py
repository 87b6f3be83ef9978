import math
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest

import property_checks as pc
from trigmin.interval import HALF_PI, PI, TWO_PI, Interval
from trigmin.model import (
    SINE_BOUNDS, DenominatorMayVanish, PairMN, ScopeError, b_mn_reference, certify_sine_bound,
    eval_f, eval_g, eval_g_tilde, f_at_zero, g_at_zero,
)
from trigmin.oracle import f_values


def mp_f(m, n, x):
    x = mpmath.mpf(x)
    return (n * mpmath.sin(x) - mpmath.sin(n * x)) / (m * mpmath.sin(x) - mpmath.sin(m * x))


# -- PairMN -------------------------------------------------------------------


def test_pair_invariants():
    p = PairMN(81, 42)
    assert p.lam == Fraction(42, 81) and p.nu == Fraction(42, 81) ** 2
    with pytest.raises(ValueError):
        PairMN(3, 3)
    with pytest.raises(ValueError):
        PairMN(5, 1)
    with pytest.raises(TypeError):
        PairMN(81.0, 42)


@pytest.mark.parametrize("m,n,ok", [
    (81, 42, True), (81, 66, True), (81, 68, False), (81, 40, False),
    (82, 42, False), (81, 41, False), (79, 40, False), (10001, 8194, True), (10001, 8196, False),
])
def test_theorem_scope(m, n, ok):
    p = PairMN(m, n)
    assert p.theorem_scope is ok
    assert (p.scope_violations() == []) is ok
    if not ok:
        with pytest.raises(ScopeError):
            p.require_scope()


# -- values at zero -----------------------------------------------------------


def test_f_at_zero_examples():
    assert f_at_zero(PairMN(3, 2)) == Fraction(1, 4)
    assert f_at_zero(PairMN(81, 42)) == Fraction(74046, 531360)
    assert f_at_zero(PairMN(5, 4)) == Fraction(1, 2)


def test_g_at_zero_examples():
    assert g_at_zero(PairMN(3, 2)) == Fraction(-5, 4)
    g = g_at_zero(PairMN(81, 42))
    assert g == Fraction(-201474, 6560)
    lam = Fraction(42, 81)
    assert abs(float(g + lam * (1 - lam ** 2) * 81)) / 81 < 0.01


def test_g_at_zero_is_m_f0_minus_n():
    for m, n in [(3, 2), (81, 42), (101, 82), (7, 3)]:
        p = PairMN(m, n)
        assert g_at_zero(p) == m * f_at_zero(p) - n


# -- pointwise evaluation -----------------------------------------------------


def test_eval_f_at_half_pi():
    assert 0.5 in eval_f(PairMN(3, 2), HALF_PI)


def test_eval_f_matches_high_precision():
    enc = eval_f(PairMN(81, 42), Interval(0.05))
    with mpmath.workdps(40):
        ref = mp_f(81, 42, 0.05)
        assert enc.lo <= ref <= enc.hi
    assert enc.width < 1e-9
    oracle = f_values(81, 42, np.array([0.05]))[0]
    assert abs(oracle - enc.mid) <= 1e-9


def test_g_identities():
    p = PairMN(81, 42)
    for x in (0.05, 0.7, 2.0, 3.0):
        xi = Interval(x)
        g = eval_g(p, xi)
        via_f = 81 * eval_f(p, xi) - 42
        assert g.overlaps(via_f)
        assert (g - via_f).mag < 1e-9
        shifted = eval_g(p, xi + PI)
        assert eval_g_tilde(p, xi).overlaps(shifted)


def test_series_path_at_zero():
    p = PairMN(81, 42)
    enc = eval_f(p, Interval(-1e-3, 1e-3))
    assert float(f_at_zero(p)) in enc


def test_pole_at_pi_is_signalled():
    # m odd, n even: the denominator vanishes to third order at pi, the numerator only to first
    p = PairMN(81, 42)
    with pytest.raises(DenominatorMayVanish):
        eval_f(p, PI)
    with pytest.raises(DenominatorMayVanish):
        eval_f(p, Interval(0.5, 3.5))
    near = [eval_f(p, PI - Interval(10.0 ** -k)).lo for k in (2, 3, 4)]
    assert near[0] < near[1] < near[2]


def test_g_oscillates_on_open_half_period():
    for m, n in [(81, 42), (81, 66), (101, 82)]:
        p = PairMN(m, n)
        xs = np.linspace(0.01, math.pi - 0.01, 4001)
        signs = set()
        for x in xs[::7]:
            g = eval_g(p, Interval(float(x)))
            if g.lo > 0:
                signs.add(1)
            elif g.hi < 0:
                signs.add(-1)
        assert signs == {1, -1}


def test_oracle_samples_inside_enclosures():
    assert pc.oracle_model_consistency(PairMN(81, 42), 1000) == 0


# -- sine sandwiches ----------------------------------------------------------


def test_all_sandwiches_certified():
    results = pc.sandwiches_certified()
    assert len(results) == 6
    assert all(results.values()), results


def test_near_zero_sandwich_spot_value():
    lower, upper = SINE_BOUNDS["near_zero"]
    gap = lower.gap(Interval.from_fraction("5.78"))
    assert abs(gap.mid - 0.0104) <= 1e-3
    assert certify_sine_bound(upper).proved


def test_shifted_bound_evaluates_around_three_half_pi():
    lower, upper = SINE_BOUNDS["near_pi_large"]
    x = 3 * HALF_PI
    assert -1.0 in lower.evaluate(x) and -1.0 in upper.evaluate(x)


# -- B_mn descriptor ----------------------------------------------------------


def test_b_mn_reference():
    assert b_mn_reference(PairMN(4, 3)).known_value == 0
    assert b_mn_reference(PairMN(3, 2)).known_value == Fraction(1, 4)
    ref = b_mn_reference(PairMN(81, 42))
    assert ref.known_value == Fraction(74046, 531360) == ref.f_at_zero
    assert "theorem" in ref.reason
    assert b_mn_reference(PairMN(81, 68)).known_value is None

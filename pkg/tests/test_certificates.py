import json
import random
from fractions import Fraction

import pytest

from expected import ACCEPT_PAIRS, PRINTED, REJECT_PAIRS
from trigmin.certificates import (
    HOLDS, LINES, STEP_ORDER, assemble_certificate, breakpoints, paper_tolerance,
    verify_appendix_F_08194, verify_appendix_F_half, verify_appendix_Fl, verify_appendix_Fll,
    verify_far_region, verify_near_pi_large, verify_near_pi_small, verify_near_zero,
)
from trigmin.certificates.appendix import phi_direct, phi_quadratic, psi_line_side
from trigmin.certificates.far import (
    corollary_endpoint_margin, corollary_sides, region_threshold,
)
from trigmin.interval import Interval
from trigmin.model import PairMN, ScopeError
from trigmin.prover import ProofStatus

P81 = PairMN(81, 42)


@pytest.fixture(scope="module")
def cert81():
    return assemble_certificate(P81)


def _contains(enc: Interval, printed: str, tol) -> bool:
    v = Fraction(printed)
    return v - tol <= Fraction(enc.lo) and Fraction(enc.hi) <= v + tol


# -- tolerance convention -----------------------------------------------------


@pytest.mark.parametrize("printed,tol", [
    ("0.7516", Fraction("5e-4")), ("1.825", Fraction("5e-3")), ("6.9607e-3", Fraction("5e-7")),
    ("5.5947e-7", Fraction("5e-11")), ("-4.305", Fraction("5e-3")),
])
def test_paper_tolerance(printed, tol):
    assert paper_tolerance(printed) == tol


def test_every_printed_value_matches_its_step(cert81):
    steps = {s.step_id: s for s in cert81.steps}
    seen = set()
    for s in cert81.steps:
        for pv in s.paper_expected:
            key = f"{s.step_id}:{pv.name}"
            seen.add(key)
            printed, tol = PRINTED[key]
            assert pv.printed == printed
            if tol == 0:
                assert pv.exact and pv.ok
            else:
                assert _contains(pv.enclosure, printed, tol), (key, pv.enclosure)
    assert seen == set(PRINTED)
    assert set(steps) == set(STEP_ORDER)


# -- far region ---------------------------------------------------------------


def test_far_region_example():
    r = verify_far_region(P81)
    assert r.proved and r.margin > 0
    lhs = r.computed_value("corollary_lhs_times_m")
    rhs = r.computed_value("corollary_rhs_times_m_at_0.82")
    assert abs(lhs.mid - 5.7751) < 1e-4 and abs(rhs.mid - 5.7751) < 1e-4
    assert lhs.lo > rhs.hi
    thr = region_threshold(P81)
    assert 0 < thr < 1


def test_corollary_threshold_is_tight_at_79():
    assert corollary_endpoint_margin(81) > 0
    assert corollary_endpoint_margin(79) < 0
    lhs, rhs = corollary_sides(81, Fraction("0.82"))
    assert lhs - rhs == corollary_endpoint_margin(81)


# -- neighbourhood of 0 -------------------------------------------------------


def test_near_zero_examples():
    r = verify_near_zero(P81)
    assert r.proved
    assert _contains(r.computed_value("p_at_578sq"), "6.9607e-3", Fraction("1e-6"))
    assert _contains(r.computed_value("V_025"), "5.5947e-7", Fraction("1e-10"))
    assert _contains(r.computed_value("V_06724"), "6.857e-5", Fraction("1e-8"))
    assert _contains(r.computed_value("a"), "0.7516", Fraction("1e-4"))
    assert _contains(r.computed_value("x2"), "5.5629", Fraction("1e-4"))


# -- neighbourhood of pi ------------------------------------------------------


def test_near_pi_small_worst_corner():
    lam, y = Fraction("0.82"), Fraction("2.8") ** 2
    exact = 2 - lam ** 2 * y / 3 - (1 - lam ** 2) * 9 * y ** 2 / (120 * 8)
    assert exact > 0
    r = verify_near_pi_small(P81)
    assert r.proved
    assert Fraction(r.computed_value("G_corner").lo) <= exact <= Fraction(r.computed_value("G_corner").hi)
    for name in ("G_nonincreasing_in_u", "G_nonincreasing_in_y", "G_nonincreasing_in_lambda",
                 "G_lambda_zero"):
        assert r.check(name).status is ProofStatus.PROVED


def test_near_pi_small_accepts_small_m():
    # the inner neighbourhood of pi only needs m >= 3, which PairMN always guarantees
    assert verify_near_pi_small(PairMN(5, 4)).proved
    assert verify_near_pi_small(PairMN(3, 2)).proved


def test_near_pi_large_examples():
    r = verify_near_pi_large(P81)
    assert r.proved
    assert _contains(r.computed_value("v_28_m5"), "1.825", Fraction("1e-3"))
    assert _contains(r.computed_value("v_578_m5"), "4.9228", Fraction("1e-4"))
    assert _contains(r.computed_value("p_slope_28"), "-1.0076", Fraction("1e-4"))
    assert _contains(r.computed_value("p_28"), "-1.6873", Fraction("1e-4"))


# -- appendix lemmas ----------------------------------------------------------


def test_appendix_Fll_examples():
    r = verify_appendix_Fll()
    assert r.proved
    for name, printed in [("p_28", "17.0391"), ("p_5", "40.5431"), ("p_critical_point", "4.3101"),
                          ("q_28", "-1.8447")]:
        assert _contains(r.computed_value(name), printed, Fraction("1e-4"))
    assert _contains(r.computed_value("q_5"), "-4.305", Fraction("1e-3"))


def test_appendix_Fl_examples():
    r = verify_appendix_Fl()
    assert r.proved
    for name, printed in [("psi_0.028", "0.1327"), ("psi_-2.213", "-1.0165"),
                          ("psi_-1.375", "-3.1429"), ("bound_psi_positive", "-4.6807"),
                          ("bound_small_lambda", "-0.2385")]:
        assert _contains(r.computed_value(name), printed, Fraction("1e-4"))


def test_appendix_F_half_examples():
    r = verify_appendix_F_half()
    assert r.proved
    assert _contains(r.computed_value("F_half_28"), "0.3448", Fraction("1e-4"))
    assert _contains(r.computed_value("F_half_5"), "2.2033", Fraction("1e-4"))
    assert r.computed_value("parabola_max").hi < 0


def test_appendix_F_08194_examples():
    r = verify_appendix_F_08194()
    assert r.proved
    for name, printed in [("a", "0.74540818"), ("b", "-7.45338058"), ("c", "20.47063551")]:
        assert _contains(r.computed_value(name), printed, Fraction("1e-8"))
    assert _contains(r.computed_value("Delta_3"), "-0.000057", Fraction("1e-6"))
    assert _contains(r.computed_value("Delta_5"), "-0.000046", Fraction("1e-6"))
    l4, p4 = r.computed_value("L4_t4"), r.computed_value("psi_t4")
    assert _contains(l4, "1.839595", Fraction("1e-7"))
    assert _contains(p4, "1.8395934", Fraction("1e-7"))
    assert l4.lo > p4.hi
    q = phi_quadratic()
    assert q.max_width <= 1e-8


def test_breakpoints_exact():
    ts = breakpoints()
    assert ts[1] == Fraction(64, 15)
    assert ts[2] == Fraction(57657, 11875)
    assert ts[4] == Fraction(6263, 1230)
    assert ts[3] == Fraction("5.035") and ts[5] == Fraction("5.407")
    assert list(ts) == sorted(ts)
    for a, b in zip(LINES, LINES[1:]):
        assert a.t_to == b.t_from
        assert a(a.t_to) == b(a.t_to)


def test_line_sandwich_pointwise():
    """phi >= L_i >= psi at 200 float samples per segment (non-rigorous cross-check)."""
    q = phi_quadratic()
    rng = random.Random(3)
    for line in LINES:
        lo, hi = float(line.t_from), float(line.t_to)
        for _ in range(200):
            t = rng.uniform(lo, hi)
            phi = q(t).mid
            ln = float(line(Fraction(t)))
            psi = psi_line_side(t).mid
            assert phi >= ln >= psi, (t, phi, ln, psi)
            assert abs(phi_direct(t).mid - phi) < 1e-7


# -- assembly -----------------------------------------------------------------


@pytest.mark.parametrize("m,n", ACCEPT_PAIRS)
def test_accept_pairs_hold(m, n):
    c = assemble_certificate(PairMN(m, n))
    assert c.verdict == HOLDS and c.failed_step is None
    assert [s.step_id for s in c.steps] == list(STEP_ORDER)
    for s in c.steps:
        assert s.proved and s.margin > 0
        assert all(p.ok for p in s.paper_expected)


@pytest.mark.parametrize("m,n", REJECT_PAIRS)
def test_reject_pairs(m, n):
    with pytest.raises(ScopeError):
        assemble_certificate(PairMN(m, n))


def test_doubled_depth_never_flips(cert81):
    deep = assemble_certificate(P81, max_depth=80)
    for a, b in zip(cert81.steps, deep.steps):
        assert not (a.proved and b.status is ProofStatus.REFUTED)
        assert b.proved


def test_threads_do_not_change_the_result(cert81):
    par = assemble_certificate(P81, threads=4)
    assert json.dumps(par.to_dict()) == json.dumps(cert81.to_dict())


def test_certificate_serialises(cert81):
    d = cert81.to_dict()
    text = json.dumps(d, sort_keys=True)
    back = json.loads(text)
    assert back["verdict"] == HOLDS
    assert back["pair"] == {"m": 81, "n": 42, "lambda": "14/27"}
    first = back["steps"][0]
    assert set(first) == {"step_id", "status", "computed", "paper_expected", "checks", "margin",
                          "parameters"}
    for s in back["steps"]:
        for c in s["computed"]:
            assert float(c["lo"]) <= float(c["hi"])

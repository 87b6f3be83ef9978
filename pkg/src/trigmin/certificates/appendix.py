"""F(lam, t) := F(lam, t, 81) >= 0 on [0.5, 0.8194] x [2.8, 5.78].

Four lemmas, each verified once and cached (they do not depend on the pair):

* ``appendix_Fll``    F_lamlam <= 0 on [0.5, 0.82] x [2.8, 5]
* ``appendix_Fl``     F_lam <= 0 on [0.5, 0.82] x [5, 5.78]
* ``appendix_F_half`` F(0.5, t) >= 0 on [2.8, 5]
* ``appendix_F_08194`` F(0.8194, t) >= 0 on [2.8, 5.78] by a line sandwich

Concavity in lam on t <= 5 and monotonicity in lam on t >= 5 reduce the box
to the two edges lam = 0.5 and lam = 0.8194.  Each lemma replays the
hand-calculator chain with rigorous enclosures and also proves its conclusion
directly by subdivision of the box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..interval import PI, Interval, as_interval
from ..model import LAMBDA_MAX, LAMBDA_MAX_NEAR, LAMBDA_MIN
from ..poly import PolyCoeffs
from ..prover import DEFAULT_MAX_DEPTH, prove_sign_on_box, prove_sign_on_interval
from .base import StepBuilder, StepResult
from .common import I, T_FAR, T_MID, overlaps, span, three_pi_over_two
from .pi_model import capital_f, f_lam, f_lamlam, f_lamlamlam, f_tt

__all__ = [
    "K81",
    "D_CONST",
    "LineSpec",
    "Quadratic",
    "LINES",
    "breakpoints",
    "phi_quadratic",
    "psi_line_side",
    "verify_appendix_Fll",
    "verify_appendix_Fl",
    "verify_appendix_F_half",
    "verify_appendix_F_08194",
]

T_SPLIT = Fraction(5)
K81 = 1 + Fraction(1, 6560)
LAM_HI = LAMBDA_MAX  # 0.8194
D_CONST = LAM_HI * (1 - LAM_HI ** 2) * K81


def _edge(lo, hi) -> Interval:
    return span(I(lo), I(hi))


def _identity_samples(b: StepBuilder, name: str, lhs, rhs, lo: Fraction, hi: Fraction,
                      count: int = 33) -> None:
    """Two expressions of one function must have overlapping enclosures at grid points."""
    bad = 0
    for k in range(count):
        t = I(lo + (hi - lo) * Fraction(k, count - 1))
        if not overlaps(lhs(t), rhs(t)):
            bad += 1
    b.exact(name, Fraction(bad), "==")


# --------------------------------------------------------------------------
# Lemma 1: F_lamlam <= 0 for t in [2.8, 5]


def lemma1_p(t) -> Interval:
    """Lower bound of F_lam^3: -t^3 (0.82 t - 3pi/2) - 6 K (5 + 1)."""
    t = as_interval(t)
    return -(t ** 3) * (I(LAMBDA_MAX_NEAR) * t - three_pi_over_two()) - 36 * I(K81)


def lemma1_p_slope_factor(t) -> Interval:
    """p'(t) = t^2 (9pi/2 - 3.28 t); this is the second factor."""
    return 9 * PI / 2 - I(Fraction("3.28")) * as_interval(t)


def lemma1_q(t) -> Interval:
    """t^2 - 4.92 K (t + 1 - (t - 3pi/2)^2/2) + 0.016, a convex parabola."""
    t = as_interval(t)
    a = t - three_pi_over_two()
    return t.sqr() - I(Fraction("4.92") * K81) * (t + 1 - a.sqr() / 2) + I(Fraction("0.016"))


@lru_cache(maxsize=None)
def verify_appendix_Fll(max_depth: int = DEFAULT_MAX_DEPTH) -> StepResult:
    b = StepBuilder("appendix_Fll")
    b.param("m", 81)
    b.param("lambda_range", f"[{LAMBDA_MIN}, {LAMBDA_MAX_NEAR}]")
    b.param("t_range", "[2.8, 5]")
    lam_box, t_box = _edge(LAMBDA_MIN, LAMBDA_MAX_NEAR), _edge(T_MID, T_SPLIT)

    # F_lam^3 >= p(t) needs lam <= 0.82 and the big-P factor <= t + 1 <= 6
    crit = b.paper("p_critical_point", 9 * PI / I(Fraction("6.56")), "4.3101")
    b.compare("critical_after_2.8", crit, ">", I(T_MID))
    b.compare("critical_before_5", crit, "<", I(T_SPLIT))
    b.compare("p_slope_positive_at_2.8", lemma1_p_slope_factor(I(T_MID)), ">")
    b.compare("p_slope_negative_at_5", lemma1_p_slope_factor(I(T_SPLIT)), "<")
    p28 = b.paper("p_28", lemma1_p(I(T_MID)), "17.0391")
    p5 = b.paper("p_5", lemma1_p(I(T_SPLIT)), "40.5431")
    b.compare("p_28_positive", p28, ">")
    b.compare("p_5_positive", p5, ">")
    b.sign("F_lll_above_p",
           prove_sign_on_box(lambda lam, t: f_lamlamlam(lam, t) - lemma1_p(t), (lam_box, t_box),
                             ">=0", max_depth=max_depth))
    b.sign("F_lll_nonneg_direct",
           prove_sign_on_box(f_lamlamlam, (lam_box, t_box), ">0", max_depth=max_depth))

    # F_lamlam(lam, t) <= F_lamlam(0.82, t) < q(t)
    b.exact("cubic_term_below_0.016", Fraction("4.92") * K81 * T_SPLIT ** 3 / 39366, "<",
            Fraction("0.016"))
    b.exact("q_convex", 1 + Fraction("4.92") * K81 / 2, ">")
    q28 = b.paper("q_28", lemma1_q(I(T_MID)), "-1.8447")
    q5 = b.paper("q_5", lemma1_q(I(T_SPLIT)), "-4.305")
    b.compare("q_28_negative", q28, "<")
    b.compare("q_5_negative", q5, "<")
    b.sign("F_ll_edge_below_q",
           prove_sign_on_interval(lambda t: f_lamlam(I(LAMBDA_MAX_NEAR), t) - lemma1_q(t), t_box,
                                  "<=0", max_depth=max_depth))
    b.sign("F_ll_negative_direct",
           prove_sign_on_box(f_lamlam, (lam_box, t_box), "<0", max_depth=max_depth))
    return b.result()


# --------------------------------------------------------------------------
# Lemma 2: F_lam <= 0 for t in [5, 5.78]


def lemma2_even_quartic(x) -> Interval:
    x2 = as_interval(x).sqr()
    return -1 + x2 / 2 - x2.sqr() / 24


def lemma2_parabola(t) -> Interval:
    """t + 1 - (t - 3pi/2)^2/2."""
    t = as_interval(t)
    return t + 1 - (t - three_pi_over_two()).sqr() / 2


def lemma2_psi(u) -> Interval:
    """(u + 3pi/2)(u - u^3/6); equals lam * t (B - B^3/6) with u = B."""
    u = as_interval(u)
    return (u + three_pi_over_two()) * (u - u ** 3 / 6)


def lemma2_psi_curv(u) -> Interval:
    u = as_interval(u)
    return 2 - 3 * PI * u / 2 - 2 * u.sqr()


@lru_cache(maxsize=None)
def verify_appendix_Fl(max_depth: int = DEFAULT_MAX_DEPTH) -> StepResult:
    b = StepBuilder("appendix_Fl")
    b.param("m", 81)
    b.param("lambda_range", f"[{LAMBDA_MIN}, {LAMBDA_MAX_NEAR}]")
    b.param("t_range", "[5, 5.78]")
    lam_box, t_box = _edge(LAMBDA_MIN, LAMBDA_MAX_NEAR), _edge(T_SPLIT, T_FAR)
    c = three_pi_over_two()

    # first summand <= 0: |t - 3pi/2| <= 1.1 and the even quartic is negative there
    b.compare("shift_above_-1.1", I(T_SPLIT) - c, ">=", I(Fraction("-1.1")))
    b.compare("shift_below_1.1", I(T_FAR) - c, "<=", I(Fraction("1.1")))
    quartic = PolyCoeffs.of(-1, 0, Fraction(1, 2), 0, Fraction(-1, 24))
    b.exact("quartic_convex_on_1.1", 1 - Fraction("1.1") ** 2 / 2, ">")
    pq = b.paper("quartic_at_1.1", I(quartic(Fraction("1.1"))), "-0.456")
    b.compare("quartic_at_1.1_negative", pq, "<")

    # third summand: h < phi(lam), piecewise 6.22 / 5.95
    top = b.value("parabola_max_times_K", 3 * (1 + PI) / 2 * I(K81))
    b.compare("parabola_max_below_6.22", top, "<", I(Fraction("6.22")))
    p5 = b.paper("parabola_5", lemma2_parabola(I(T_SPLIT)), "5.9586")
    p578 = b.paper("parabola_578", lemma2_parabola(I(T_FAR)), "6.2101")
    b.compare("parabola_5_above_5.9585", p5, ">", I(Fraction("5.9585")))
    b.compare("parabola_578_above_5.9585", p578, ">", I(Fraction("5.9585")))
    cube = T_FAR ** 3 / 39366
    b.value("cubic_term_at_578", I(cube))
    # the cubic term reaches 0.0049053 at t = 5.78; 5.9585 - 0.0049053 still clears 5.95
    b.exact("parabola_minus_cubic_above_5.95", Fraction("5.9585") - cube, ">", Fraction("5.95"))

    # psi(u) on u = lam t - 3pi/2 in [-2.213, 0.028]
    b.compare("u_low_above_-2.213", I(LAMBDA_MIN) * I(T_SPLIT) - c, ">", I(Fraction("-2.213")))
    b.compare("u_high_below_0.028", I(LAMBDA_MAX_NEAR) * I(T_FAR) - c, "<", I(Fraction("0.028")))
    b.sign("psi_convex_u",
           prove_sign_on_interval(lemma2_psi_curv, _edge(Fraction("-2.213"), Fraction("0.028")),
                                  ">0", max_depth=max_depth))
    s028 = b.paper("psi_0.028", lemma2_psi(I(Fraction("0.028"))), "0.1327")
    s2213 = b.paper("psi_-2.213", lemma2_psi(I(Fraction("-2.213"))), "-1.0165")
    s1375 = b.paper("psi_-1.375", lemma2_psi(I(Fraction("-1.375"))), "-3.1429")
    b.compare("psi_0.028_below_0.133", s028, "<", I(Fraction("0.133")))
    b.compare("psi_-2.213_negative", s2213, "<")
    b.compare("psi_-2.213_below_-1.016", s2213, "<", I(Fraction("-1.016")))
    b.compare("psi_-1.375_below_psi_-2.213", s1375, "<", s2213)
    # psi > 0 forces lam > 3pi/(2t) >= 3pi/(2*5.78) > 0.815
    b.compare("lambda_threshold", c / I(T_FAR), ">", I(Fraction("0.815")))
    b.exact("lam_one_minus_3lam2_decreasing", 1 - 9 * LAMBDA_MIN ** 2, "<")
    b.compare("one_over_sqrt3_above_0.5", I(Fraction(1, 3)), ">", I(LAMBDA_MIN ** 2))
    # lam < 1/sqrt(3): u <= 5.78/sqrt(3) - 3pi/2 < -1.375, i.e. 5.78^2 < 3 (1.375 + 3pi/2)^2
    b.compare("u_bound_small_lambda", 3 * (I(Fraction("1.375")) + c).sqr(), ">", I(T_FAR ** 2))
    bound1 = Fraction("0.133") + Fraction("0.815") * Fraction("5.95") * (1 - 3 * Fraction("0.815") ** 2)
    bound2 = Fraction("-1.016") + Fraction("0.5") * Fraction("6.22") * (1 - 3 * Fraction("0.5") ** 2)
    b.paper("bound_psi_positive", I(bound1), "-4.6807")
    b.paper("bound_small_lambda", I(bound2), "-0.2385", exact_value=bound2)
    b.exact("bound_psi_positive_negative", bound1, "<")
    b.exact("bound_small_lambda_negative", bound2, "<")

    b.sign("F_l_first_summand_nonpositive",
           prove_sign_on_interval(lambda t: lemma2_even_quartic(as_interval(t) - c), t_box, "<0",
                                  max_depth=max_depth))
    b.sign("F_l_negative_direct",
           prove_sign_on_box(f_lam, (lam_box, t_box), "<0", max_depth=max_depth))
    return b.result()


# --------------------------------------------------------------------------
# Lemma 3: F(0.5, t) >= 0 for t in [2.8, 5]


def lemma3_parabola(t) -> Interval:
    """3/4 - (t - 3pi/2)^2/2 - (t - 3pi)^2/16, an upper bound of 2 F_tt(0.5, t)."""
    t = as_interval(t)
    return I(Fraction(3, 4)) - (t - three_pi_over_two()).sqr() / 2 - (t - 3 * PI).sqr() / 16


# Coefficients of the parabola as (rational, power of pi) pairs: A t^2 + B t + C
PARABOLA_A = Fraction(-9, 16)
PARABOLA_B_PI = Fraction(15, 8)  # B = (15/8) pi
PARABOLA_C = (Fraction(3, 4), Fraction(-27, 16))  # C = 3/4 - (27/16) pi^2


def parabola_max_pi2_coefficient() -> tuple[Fraction, Fraction]:
    """Max = C - B^2/(4A) = c0 + c2 pi^2 with exact c0, c2."""
    c0, c2 = PARABOLA_C
    return c0, c2 - PARABOLA_B_PI ** 2 / (4 * PARABOLA_A)


@lru_cache(maxsize=None)
def verify_appendix_F_half(max_depth: int = DEFAULT_MAX_DEPTH) -> StepResult:
    b = StepBuilder("appendix_F_half")
    b.param("m", 81)
    b.param("lambda", "1/2")
    b.param("t_range", "[2.8, 5]")
    t_box = _edge(T_MID, T_SPLIT)
    half = I(LAMBDA_MIN)

    c0, c2 = parabola_max_pi2_coefficient()
    b.exact("parabola_max_pi2_coefficient", c2, "==", Fraction(-1, 8))
    b.exact("parabola_concave", PARABOLA_A, "<")
    top = b.value("parabola_max", c0 + c2 * PI.sqr())
    b.compare("parabola_max_negative", top, "<")
    # pi > 3 already suffices: 3/4 - 9/8 < 0
    b.exact("parabola_max_negative_pi_gt_3", c0 + c2 * 9, "<")
    _identity_samples(b, "parabola_matches_expansion", lemma3_parabola,
                      lambda t: (I(PARABOLA_A) * t.sqr() + I(PARABOLA_B_PI) * PI * t
                                 + I(c0) + I(PARABOLA_C[1]) * PI.sqr()), T_MID, T_SPLIT)
    b.sign("F_tt_below_parabola",
           prove_sign_on_interval(lambda t: 2 * f_tt(half, t) - lemma3_parabola(t), t_box, "<=0",
                                  max_depth=max_depth))
    b.sign("F_half_concave_direct",
           prove_sign_on_interval(lambda t: f_tt(half, t), t_box, "<0", max_depth=max_depth))
    f28 = b.paper("F_half_28", capital_f(half, I(T_MID)), "0.3448")
    f5 = b.paper("F_half_5", capital_f(half, I(T_SPLIT)), "2.2033")
    b.compare("F_half_28_positive", f28, ">")
    b.compare("F_half_5_positive", f5, ">")
    b.sign("F_half_positive_direct",
           prove_sign_on_interval(lambda t: capital_f(half, t), t_box, ">0", max_depth=max_depth))
    return b.result()


# --------------------------------------------------------------------------
# Lemma 4: F(0.8194, t) >= 0 for t in [2.8, 5.78]


@dataclass(frozen=True)
class LineSpec:
    slope: Fraction
    intercept: Fraction
    t_from: Fraction
    t_to: Fraction

    def __post_init__(self):
        if not self.t_from < self.t_to:
            raise ValueError("breakpoints must be increasing")

    def __call__(self, t) -> Fraction:
        return self.slope * Fraction(t) + self.intercept

    def enclosure(self, t) -> Interval:
        return I(self.slope) * as_interval(t) + I(self.intercept)


def intersection(a: LineSpec, b: LineSpec) -> Fraction:
    return (b.intercept - a.intercept) / (a.slope - b.slope)


_LINE_COEFFS = [("-1.5", "8.5"), ("-0.45", "4.02"), ("0.025", "1.71372"),
                ("0.077", "1.4519"), ("0.2", "0.8256"), ("1", "-3.5")]
PAPER_BREAKPOINTS = ("2.8", "64/15", "57657/11875", "5.035", "6263/1230", "5.407", "5.78")


def breakpoints() -> tuple[Fraction, ...]:
    raw = [(Fraction(s), Fraction(c)) for s, c in _LINE_COEFFS]
    inner = []
    for (s0, c0), (s1, c1) in zip(raw, raw[1:]):
        inner.append((c1 - c0) / (s0 - s1))
    return (T_MID, *inner, T_FAR)


def _build_lines() -> tuple[LineSpec, ...]:
    ts = breakpoints()
    return tuple(LineSpec(Fraction(s), Fraction(c), ts[i], ts[i + 1])
                 for i, (s, c) in enumerate(_LINE_COEFFS))


LINES = _build_lines()


@dataclass(frozen=True)
class Quadratic:
    a: Interval
    b: Interval
    c: Interval

    def __call__(self, t) -> Interval:
        t = as_interval(t)
        return (self.a * t + self.b) * t + self.c

    def discriminant(self, line: LineSpec) -> Interval:
        return (self.b - I(line.slope)).sqr() - 4 * self.a * (self.c - I(line.intercept))

    @property
    def max_width(self) -> float:
        return max(self.a.width, self.b.width, self.c.width)


def phi_quadratic() -> Quadratic:
    """Positive part of F(0.8194, t): a t^2 + b t + c."""
    lam = LAM_HI
    d = I(D_CONST)
    a = I(lam / 2 + lam * lam / 2)
    b = d - I(lam) * 3 * PI
    c = d + I((1 + lam) * Fraction(9, 8)) * PI.sqr()
    return Quadratic(a, b, c)


def phi_direct(t) -> Interval:
    t = as_interval(t)
    lam = I(LAM_HI)
    c = three_pi_over_two()
    return lam * (t - c).sqr() / 2 + (lam * t - c).sqr() / 2 + I(D_CONST) * (t + 1)


def psi_line_side(t) -> Interval:
    """Negative part of F(0.8194, t), convex in t."""
    t = as_interval(t)
    lam = I(LAM_HI)
    c = three_pi_over_two()
    a2 = (t - c).sqr()
    b2 = (lam * t - c).sqr()
    return (lam * (1 + a2.sqr() / 24) + 1 + b2.sqr() / 24
            + I(D_CONST) * (t ** 3 / 39366 + a2 / 2))


def psi_line_side_curv(t) -> Interval:
    t = as_interval(t)
    lam = I(LAM_HI)
    c = three_pi_over_two()
    return (lam * (t - c).sqr() / 2 + lam.sqr() * (lam * t - c).sqr() / 2
            + I(D_CONST) * (t / 6561 + 1))


_DELTA_PAPER = ("-0.249298", "-0.002414", "-0.000057", "-0.000252", "-0.000046", "-0.011988")
_TABLE_PAPER = (("4.3", "4.1931243"), ("2.1", "1.9392134"), ("1.8351032", "1.8350379"),
                ("1.839595", "1.8395934"), ("1.843974", "1.843946"), ("1.907", "1.8936546"),
                ("2.28", "2.0185385"))
TABLE_TOL = Fraction(1, 10 ** 7)
COEFF_TOL = Fraction(1, 10 ** 8)
DELTA_TOL = Fraction(1, 10 ** 6)


@lru_cache(maxsize=None)
def verify_appendix_F_08194(max_depth: int = DEFAULT_MAX_DEPTH) -> StepResult:
    b = StepBuilder("appendix_F_08194")
    b.param("m", 81)
    b.param("lambda", str(LAM_HI))
    b.param("t_range", "[2.8, 5.78]")
    t_box = _edge(T_MID, T_FAR)

    quad = phi_quadratic()
    b.paper("a", quad.a, "0.74540818", tol=COEFF_TOL)
    b.paper("b", quad.b, "-7.45338058", tol=COEFF_TOL)
    b.paper("c", quad.c, "20.47063551", tol=COEFF_TOL)
    b.exact("a_exact", LAM_HI / 2 + LAM_HI ** 2 / 2, "==", Fraction("0.74540818"))
    b.compare("coefficient_width_below_1e-8", Interval.point(quad.max_width), "<",
              I(COEFF_TOL))
    b.exact("a_positive", LAM_HI / 2 + LAM_HI ** 2 / 2, ">")
    _identity_samples(b, "phi_expansion_matches", phi_direct, quad, T_MID, T_FAR)
    _identity_samples(b, "F_split_matches", lambda t: capital_f(I(LAM_HI), t),
                      lambda t: phi_direct(t) - psi_line_side(t), T_MID, T_FAR)

    for i, (line, printed) in enumerate(zip(LINES, _DELTA_PAPER), start=1):
        delta = b.paper(f"Delta_{i}", quad.discriminant(line), printed, tol=DELTA_TOL)
        b.compare(f"Delta_{i}_negative", delta, "<")

    b.sign("psi_convex", prove_sign_on_interval(psi_line_side_curv, t_box, ">0", max_depth=max_depth))

    ts = breakpoints()
    for i, (t, printed) in enumerate(zip(ts, PAPER_BREAKPOINTS), start=1):
        b.paper(f"t_{i}", I(t), printed, tol=0, exact_value=t)
    for line, nxt in zip(LINES, LINES[1:]):
        b.exact(f"lines_meet_at_{line.t_to}", line(line.t_to), "==", nxt(line.t_to))

    for i, (t, (l_printed, s_printed)) in enumerate(zip(ts, _TABLE_PAPER), start=1):
        line = LINES[min(i, 6) - 1]
        lv = b.paper(f"L{i}_t{i}", I(line(t)), l_printed, tol=TABLE_TOL)
        sv = b.paper(f"psi_t{i}", psi_line_side(I(t)), s_printed, tol=TABLE_TOL)
        b.compare(f"line_above_psi_t{i}", lv, ">", sv)

    b.sign("F_08194_positive_direct",
           prove_sign_on_interval(lambda t: capital_f(I(LAM_HI), t), t_box, ">0",
                                  max_depth=max_depth))
    return b.result()

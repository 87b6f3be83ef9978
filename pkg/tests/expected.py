"""Frozen expected values: printed value and accepted half-width for each constant.

Keys are ``step_id:name`` as they appear in the constant table.  Tolerances
are written out by hand (not derived by the package): 5 * 10^-k for a value
printed with k decimals, 1e-8 for the quadratic coefficients, 1e-6 for the
discriminants, 1e-7 for the table rows, and 0 (exact) for the breakpoints and
for -0.2385.
"""

from fractions import Fraction

F = Fraction

PRINTED = {
    # neighbourhood of 0
    "near_zero:a": ("0.7516", F("5e-4")),
    "near_zero:x1": ("0.7203", F("5e-4")),
    "near_zero:x2": ("5.5629", F("5e-4")),
    "near_zero:inv_a": ("1.3305", F("5e-4")),
    "near_zero:phi_578": ("0.0104", F("5e-4")),
    "near_zero:p_at_578sq": ("6.9607e-3", F("5e-7")),
    "near_zero:phi_bound": ("-1.74e-6", F("5e-8")),
    "near_zero:V_025": ("5.5947e-7", F("5e-11")),
    "near_zero:V_06724": ("6.857e-5", F("5e-8")),
    # neighbourhood of pi
    "near_pi_large:v_28_m5": ("1.825", F("5e-3")),
    "near_pi_large:v_578_m5": ("4.9228", F("5e-4")),
    "near_pi_large:p_slope_28": ("-1.0076", F("5e-4")),
    "near_pi_large:p_28": ("-1.6873", F("5e-4")),
    # lemma on F_lamlam
    "appendix_Fll:p_28": ("17.0391", F("5e-4")),
    "appendix_Fll:p_5": ("40.5431", F("5e-4")),
    "appendix_Fll:p_critical_point": ("4.3101", F("5e-4")),
    "appendix_Fll:q_28": ("-1.8447", F("5e-4")),
    "appendix_Fll:q_5": ("-4.305", F("5e-3")),
    # lemma on F_lam
    "appendix_Fl:quartic_at_1.1": ("-0.456", F("5e-3")),
    "appendix_Fl:parabola_5": ("5.9586", F("5e-4")),
    "appendix_Fl:parabola_578": ("6.2101", F("5e-4")),
    "appendix_Fl:psi_0.028": ("0.1327", F("5e-4")),
    "appendix_Fl:psi_-2.213": ("-1.0165", F("5e-4")),
    "appendix_Fl:psi_-1.375": ("-3.1429", F("5e-4")),
    "appendix_Fl:bound_psi_positive": ("-4.6807", F("5e-4")),
    "appendix_Fl:bound_small_lambda": ("-0.2385", F(0)),
    # lemma on F(0.5, t)
    "appendix_F_half:F_half_28": ("0.3448", F("5e-4")),
    "appendix_F_half:F_half_5": ("2.2033", F("5e-4")),
    # lemma on F(0.8194, t)
    "appendix_F_08194:a": ("0.74540818", F("1e-8")),
    "appendix_F_08194:b": ("-7.45338058", F("1e-8")),
    "appendix_F_08194:c": ("20.47063551", F("1e-8")),
    "appendix_F_08194:Delta_1": ("-0.249298", F("1e-6")),
    "appendix_F_08194:Delta_2": ("-0.002414", F("1e-6")),
    "appendix_F_08194:Delta_3": ("-0.000057", F("1e-6")),
    "appendix_F_08194:Delta_4": ("-0.000252", F("1e-6")),
    "appendix_F_08194:Delta_5": ("-0.000046", F("1e-6")),
    "appendix_F_08194:Delta_6": ("-0.011988", F("1e-6")),
    "appendix_F_08194:t_1": ("2.8", F(0)),
    "appendix_F_08194:t_2": ("64/15", F(0)),
    "appendix_F_08194:t_3": ("57657/11875", F(0)),
    "appendix_F_08194:t_4": ("5.035", F(0)),
    "appendix_F_08194:t_5": ("6263/1230", F(0)),
    "appendix_F_08194:t_6": ("5.407", F(0)),
    "appendix_F_08194:t_7": ("5.78", F(0)),
    "appendix_F_08194:L1_t1": ("4.3", F("1e-7")),
    "appendix_F_08194:psi_t1": ("4.1931243", F("1e-7")),
    "appendix_F_08194:L2_t2": ("2.1", F("1e-7")),
    "appendix_F_08194:psi_t2": ("1.9392134", F("1e-7")),
    "appendix_F_08194:L3_t3": ("1.8351032", F("1e-7")),
    "appendix_F_08194:psi_t3": ("1.8350379", F("1e-7")),
    "appendix_F_08194:L4_t4": ("1.839595", F("1e-7")),
    "appendix_F_08194:psi_t4": ("1.8395934", F("1e-7")),
    "appendix_F_08194:L5_t5": ("1.843974", F("1e-7")),
    "appendix_F_08194:psi_t5": ("1.843946", F("1e-7")),
    "appendix_F_08194:L6_t6": ("1.907", F("1e-7")),
    "appendix_F_08194:psi_t6": ("1.8936546", F("1e-7")),
    "appendix_F_08194:L7_t7": ("2.28", F("1e-7")),
    "appendix_F_08194:psi_t7": ("2.0185385", F("1e-7")),
}

# pairs inside the theorem's hypotheses, and pairs that must be refused
ACCEPT_PAIRS = [(81, 42), (81, 66), (101, 52), (101, 82), (121, 62), (121, 98)]
REJECT_PAIRS = [(81, 68), (82, 42), (79, 40)]

# m even, n odd: the minimum is 0
ZERO_BMN_PAIRS = [(4, 3), (6, 5), (8, 3)]

# numerically observed minimum of F(0.8194, t, 81) over [2.8, 5.78] must land here
MIN_F_BAND = (1e-4, 4e-4)

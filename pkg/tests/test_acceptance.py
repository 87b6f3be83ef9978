"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION k: PASS|FAIL ...`` line (visible even
without ``-s``) and then asserts, except criterion 7, which is reported only.
Criteria 1 and 2 run the command line in a fresh interpreter so that their
timings are cold (no caches shared with the rest of the suite).
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import property_checks as pc
from expected import ACCEPT_PAIRS, MIN_F_BAND, PRINTED, REJECT_PAIRS, ZERO_BMN_PAIRS
from trigmin.model import PairMN, f_at_zero
from trigmin.oracle import ARGMIN_RADIUS, compute_B_mn, global_min_f, min_F, scan_slope

BUDGET_CONSTANTS = 30.0
BUDGET_VERIFY = 300.0
BUDGET_ORACLE_PER_PAIR = 120.0


def report(capsys, k: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}")


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "trigmin.cli", *argv],
                          capture_output=True, text=True, check=False)


def _within(row, printed, tol) -> bool:
    v = Fraction(printed)
    lo, hi = Fraction(row["lo"]), Fraction(row["hi"])
    if tol == 0:
        # stated exactly: the exact value must be enclosed and agree with the printed form
        return lo <= v <= hi and row["ok"]
    return v - tol <= lo and hi <= v + tol


def test_criterion_1_constants(capsys):
    t0 = time.perf_counter()
    proc = cli("constants")
    elapsed = time.perf_counter() - t0
    doc = json.loads(proc.stdout)
    rows = {f"{r['step_id']}:{r['name']}": r for r in doc["rows"]}
    missing = sorted(set(PRINTED) - set(rows))
    bad = sorted(k for k, (printed, tol) in PRINTED.items()
                 if k in rows and not (rows[k]["paper"] == printed and _within(rows[k], printed, tol)))
    ok = proc.returncode == 0 and not missing and not bad and elapsed < BUDGET_CONSTANTS
    report(capsys, 1, ok, f"{len(PRINTED) - len(bad) - len(missing)}/{len(PRINTED)} constants in "
                          f"tolerance, {elapsed:.1f}s (budget {BUDGET_CONSTANTS:.0f}s)"
                          + (f" missing={missing}" if missing else "") + (f" bad={bad}" if bad else ""))
    assert ok


def test_criterion_2_theorem_verification(capsys):
    t0 = time.perf_counter()
    outcomes = {}
    for m, n in ACCEPT_PAIRS + REJECT_PAIRS:
        proc = cli("verify", "--m", str(m), "--n", str(n))
        outcomes[(m, n)] = (proc.returncode, json.loads(proc.stdout)["verdict"])
    elapsed = time.perf_counter() - t0
    held = [p for p in ACCEPT_PAIRS if outcomes[p] == (0, "condition_2_holds")]
    rejected = [p for p in REJECT_PAIRS if outcomes[p] == (2, "scope_rejected")]
    ok = len(held) == len(ACCEPT_PAIRS) and len(rejected) == len(REJECT_PAIRS) and elapsed < BUDGET_VERIFY
    report(capsys, 2, ok, f"{len(held)}/{len(ACCEPT_PAIRS)} pairs condition_2_holds, "
                          f"{len(rejected)}/{len(REJECT_PAIRS)} scope-rejected, {elapsed:.1f}s "
                          f"(budget {BUDGET_VERIFY:.0f}s)")
    assert ok, outcomes


def test_criterion_3_oracle_agreement(capsys):
    worst_gap = worst_arg = worst_density = worst_time = 0.0
    failures = []
    for m, n in ACCEPT_PAIRS:
        pair = PairMN(m, n)
        t0 = time.perf_counter()
        est = global_min_f(pair)
        dense = global_min_f(pair, grid_multiplier=2.0)
        elapsed = time.perf_counter() - t0
        gap = abs(est.min_value - float(f_at_zero(pair)))
        density = abs(est.min_value - dense.min_value)
        worst_gap, worst_arg = max(worst_gap, gap), max(worst_arg, abs(est.argmin_x))
        worst_density, worst_time = max(worst_density, density), max(worst_time, elapsed)
        if not (gap <= 1e-9 and abs(est.argmin_x) <= ARGMIN_RADIUS and density < 1e-9
                and elapsed < BUDGET_ORACLE_PER_PAIR):
            failures.append((m, n))
    ok = not failures
    report(capsys, 3, ok, f"max |min - f(0)| = {worst_gap:.2e}, max |argmin| = {worst_arg:.2e}, "
                          f"max density change = {worst_density:.2e}, slowest pair {worst_time:.2f}s"
                          + (f" failing={failures}" if failures else ""))
    assert ok


def test_criterion_4_known_zero(capsys):
    values = {p: compute_B_mn(PairMN(*p)) for p in ZERO_BMN_PAIRS}
    ok = all(abs(v) <= 1e-9 for v in values.values())
    report(capsys, 4, ok, "B_mn = " + ", ".join(f"{p}: {v:.2e}" for p, v in values.items()))
    assert ok


def test_criterion_5_min_margin_probe(capsys):
    t, v = min_F()
    lo, hi = MIN_F_BAND
    ok = lo <= v <= hi
    report(capsys, 5, ok, f"min F(0.8194, t, 81) = {v:.6e} at t = {t:.5f}, band [{lo:g}, {hi:g}]")
    assert ok


def test_criterion_6_property_suites(capsys):
    arith_bad, arith_n = pc.arithmetic_soundness(100_000)
    power_bad = pc.power_soundness()
    trig_bad = pc.trig_soundness()
    mono_bad = pc.inclusion_monotonicity()
    sandwiches = pc.sandwiches_certified()
    consistency = {p: pc.oracle_model_consistency(PairMN(*p), 1000) for p in ACCEPT_PAIRS}
    violations = (arith_bad + power_bad + trig_bad + mono_bad + sum(consistency.values())
                  + sum(not v for v in sandwiches.values()))
    ok = violations == 0 and arith_n == 100_000 and len(sandwiches) == 6
    report(capsys, 6, ok, f"soundness {arith_bad}/{arith_n}, powers {power_bad}, trig {trig_bad}, "
                          f"monotonicity {mono_bad}, sandwiches {sum(sandwiches.values())}/6 certified, "
                          f"oracle/model {sum(consistency.values())} over {len(consistency)}x1000 points")
    assert ok


def test_criterion_7_exploratory_scan(capsys):
    """Reported only: the location of the first failure is an open question."""
    try:
        (row,) = scan_slope(81, 81)
    except Exception as exc:  # noqa: BLE001 - exploratory, never fails the suite
        report(capsys, 7, False, f"(reported only) scan raised {exc!r}")
        pytest.skip("exploratory scan failed")
        return
    near = row.first_failure_slope is not None and 0.82 <= row.first_failure_slope <= 0.84
    report(capsys, 7, near, f"(reported only) m = 81: n_max_works = {row.n_max_works} "
                            f"(slope {row.slope:.4f}), first_failure_n = {row.first_failure_n} "
                            f"(slope {row.first_failure_slope:.4f})")

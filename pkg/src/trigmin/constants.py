"""Table of every printed constant of the argument, recomputed with enclosures.

Two pass criteria:

* ``paper``  the enclosure lies within the stated precision of the printed
  value (5 * 10^-k for k printed decimals unless a tighter error is stated);
* ``strict`` the enclosure lies within 1e-9 of an independent 50-digit
  mpmath evaluation (see ``reference``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpf

from .certificates import (
    verify_appendix_F_08194, verify_appendix_F_half, verify_appendix_Fl, verify_appendix_Fll,
    verify_near_pi_large, verify_near_zero,
)
from .certificates.base import PaperValue, StepResult
from .interval import Interval
from .model import PairMN
from .prover import DEFAULT_MAX_DEPTH
from .reference import reference_value

__all__ = ["STRICT_TOL", "REFERENCE_PAIR", "ConstantRow", "constant_rows", "collect_steps"]

STRICT_TOL = Fraction(1, 10 ** 9)
# the near-0 and near-pi constants do not depend on the pair; any in-scope pair works
REFERENCE_PAIR = PairMN(81, 42)


@dataclass(frozen=True)
class ConstantRow:
    step_id: str
    name: str
    enclosure: Interval
    printed: str
    tol: Fraction
    paper_ok: bool
    reference: mpf
    strict_ok: bool

    @property
    def key(self) -> str:
        return f"{self.step_id}:{self.name}"

    def ok(self, strict: bool = False) -> bool:
        return self.strict_ok if strict else self.paper_ok


def collect_steps(max_depth: int = DEFAULT_MAX_DEPTH) -> list[StepResult]:
    pair = REFERENCE_PAIR
    return [
        verify_near_zero(pair, max_depth),
        verify_near_pi_large(pair, max_depth),
        verify_appendix_Fll(max_depth),
        verify_appendix_Fl(max_depth),
        verify_appendix_F_half(max_depth),
        verify_appendix_F_08194(max_depth),
    ]


def _strict_ok(pv: PaperValue, ref: mpf) -> bool:
    tol = mpf(STRICT_TOL.numerator) / STRICT_TOL.denominator
    return pv.enclosure.lo - tol <= ref <= pv.enclosure.hi + tol


def constant_rows(max_depth: int = DEFAULT_MAX_DEPTH) -> list[ConstantRow]:
    rows = []
    for step in collect_steps(max_depth):
        for pv in step.paper_expected:
            ref = reference_value(f"{step.step_id}:{pv.name}")
            rows.append(ConstantRow(step.step_id, pv.name, pv.enclosure, pv.printed, pv.tol,
                                    pv.ok, ref, _strict_ok(pv, ref)))
    return rows

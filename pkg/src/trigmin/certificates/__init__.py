"""Rigorous verifiers for each step of the argument and the per-pair certificate."""

from .appendix import (
    LINES, LineSpec, Quadratic, breakpoints, verify_appendix_F_08194, verify_appendix_F_half,
    verify_appendix_Fl, verify_appendix_Fll,
)
from .assemble import FAILED, HOLDS, STEP_ORDER, Certificate, assemble_certificate
from .base import Check, PaperValue, RefutedStep, StepResult, paper_tolerance
from .far import verify_far_region
from .near_pi import verify_near_pi_large, verify_near_pi_small
from .near_zero import verify_near_zero

__all__ = [
    "LINES",
    "LineSpec",
    "Quadratic",
    "breakpoints",
    "verify_far_region",
    "verify_near_zero",
    "verify_near_pi_small",
    "verify_near_pi_large",
    "verify_appendix_Fll",
    "verify_appendix_Fl",
    "verify_appendix_F_half",
    "verify_appendix_F_08194",
    "Certificate",
    "assemble_certificate",
    "STEP_ORDER",
    "HOLDS",
    "FAILED",
    "Check",
    "PaperValue",
    "RefutedStep",
    "StepResult",
    "paper_tolerance",
]

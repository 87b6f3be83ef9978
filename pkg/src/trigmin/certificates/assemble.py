"""Run every step for one pair and fold the results into a verdict."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

from ..interval import Interval
from ..model import PairMN
from ..prover import DEFAULT_MAX_DEPTH, ProofStatus
from .appendix import (
    verify_appendix_F_08194, verify_appendix_F_half, verify_appendix_Fl, verify_appendix_Fll,
)
from .base import StepResult
from .far import verify_far_region
from .near_pi import verify_near_pi_large, verify_near_pi_small
from .near_zero import verify_near_zero

__all__ = ["STEP_ORDER", "HOLDS", "FAILED", "Certificate", "assemble_certificate", "fmt17",
           "step_to_dict", "thread_cap"]

STEP_ORDER = (
    "far_region",
    "near_zero",
    "near_pi_small",
    "near_pi_large",
    "appendix_Fll",
    "appendix_Fl",
    "appendix_F_half",
    "appendix_F_08194",
)
HOLDS = "condition_2_holds"
FAILED = "failed"


def thread_cap(default: int = 1) -> int:
    """Worker count from TRIGMIN_THREADS (at least 1)."""
    raw = os.environ.get("TRIGMIN_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def fmt17(x) -> str | None:
    """Decimal string with 17 significant digits; None for nan."""
    x = float(x)
    if math.isnan(x):
        return None
    return format(x, ".17g")


@dataclass(frozen=True)
class Certificate:
    pair: PairMN
    steps: tuple[StepResult, ...]
    verdict: str
    failed_step: str | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def status(self) -> ProofStatus:
        """Overall status: proved, or the status of the first step that is not."""
        for s in self.steps:
            if not s.proved:
                return s.status
        return ProofStatus.PROVED

    def step(self, step_id: str) -> StepResult:
        for s in self.steps:
            if s.step_id == step_id:
                return s
        raise KeyError(step_id)

    def to_dict(self) -> dict:
        return {
            "pair": {"m": self.pair.m, "n": self.pair.n,
                     "lambda": str(self.pair.lam)},
            "steps": [step_to_dict(s) for s in self.steps],
            "verdict": self.verdict,
            "failed_step": self.failed_step,
        }


def _interval_dict(name: str, v: Interval) -> dict:
    return {"name": name, "lo": fmt17(v.lo), "hi": fmt17(v.hi)}


def step_to_dict(s: StepResult) -> dict:
    return {
        "step_id": s.step_id,
        "status": s.status.value,
        "computed": [_interval_dict(k, v) for k, v in s.computed],
        "paper_expected": [
            {"name": p.name, "value": p.printed, "tol": fmt17(p.tol), "ok": p.ok,
             "lo": fmt17(p.enclosure.lo), "hi": fmt17(p.enclosure.hi)}
            for p in s.paper_expected
        ],
        "checks": [
            {"name": c.name, "status": c.status.value, "margin": fmt17(c.margin) if c.margin is not None else None,
             "detail": c.detail}
            for c in s.checks
        ],
        "margin": fmt17(s.margin),
        "parameters": {k: v for k, v in s.parameters},
    }


def _runners(pair: PairMN, max_depth: int, seed: int) -> dict:
    return {
        "far_region": partial(verify_far_region, pair, max_depth, seed),
        "near_zero": partial(verify_near_zero, pair, max_depth, seed),
        "near_pi_small": partial(verify_near_pi_small, pair, max_depth, seed),
        "near_pi_large": partial(verify_near_pi_large, pair, max_depth, seed),
        # m = 81 lemmas, independent of the pair and cached per depth
        "appendix_Fll": partial(verify_appendix_Fll, max_depth),
        "appendix_Fl": partial(verify_appendix_Fl, max_depth),
        "appendix_F_half": partial(verify_appendix_F_half, max_depth),
        "appendix_F_08194": partial(verify_appendix_F_08194, max_depth),
    }


def assemble_certificate(pair: PairMN, max_depth: int = DEFAULT_MAX_DEPTH, seed: int = 0,
                         threads: int | None = None) -> Certificate:
    """All steps in fixed order; raises ScopeError before any work for out-of-scope pairs."""
    pair.require_scope()
    runners = _runners(pair, max_depth, seed)
    threads = thread_cap() if threads is None else max(1, threads)
    if threads == 1:
        results = {k: runners[k]() for k in STEP_ORDER}
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            futures = {k: ex.submit(runners[k]) for k in STEP_ORDER}
            results = {k: futures[k].result() for k in STEP_ORDER}
    steps = tuple(results[k] for k in STEP_ORDER)
    failed = next((s.step_id for s in steps if not s.proved), None)
    return Certificate(pair, steps, HOLDS if failed is None else FAILED, failed)

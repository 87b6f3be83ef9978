"""Step results, checks and the paper-value tolerance convention."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from ..interval import Interval, as_interval
from ..prover import ProofStatus, SignProof

__all__ = [
    "PaperValue",
    "Check",
    "StepResult",
    "StepBuilder",
    "paper_tolerance",
    "RefutedStep",
]


class RefutedStep(RuntimeError):
    pass


def paper_tolerance(printed: str) -> Fraction:
    """``5 * 10**-k`` for a value printed with k decimals: ``"0.7516"`` -> 5e-4."""
    exp = Decimal(printed).as_tuple().exponent
    return Fraction(5) * Fraction(10) ** exp


@dataclass(frozen=True)
class PaperValue:
    name: str
    enclosure: Interval
    printed: str
    tol: Fraction
    exact_value: Fraction | None = None  # set for rows the paper states exactly

    @property
    def value(self) -> Fraction:
        return Fraction(self.printed)

    @property
    def exact(self) -> bool:
        return self.exact_value is not None

    @property
    def ok(self) -> bool:
        if self.exact_value is not None:
            return self.exact_value == self.value
        v, t = self.value, self.tol
        return v - t <= Fraction(self.enclosure.lo) and Fraction(self.enclosure.hi) <= v + t


@dataclass(frozen=True)
class Check:
    name: str
    status: ProofStatus
    # distance to violation for strict claims; None for claims that may be tight
    margin: float | None
    detail: str = ""


@dataclass(frozen=True)
class StepResult:
    step_id: str
    status: ProofStatus
    computed: tuple[tuple[str, Interval], ...]
    paper_expected: tuple[PaperValue, ...]
    checks: tuple[Check, ...]
    margin: float
    parameters: tuple[tuple[str, str], ...] = ()

    @property
    def proved(self) -> bool:
        return self.status is ProofStatus.PROVED

    def computed_value(self, name: str) -> Interval:
        for k, v in self.computed:
            if k == name:
                return v
        raise KeyError(name)

    def paper_value(self, name: str) -> PaperValue:
        for pv in self.paper_expected:
            if pv.name == name:
                return pv
        raise KeyError(name)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[str]:
        bad = [c.name for c in self.checks if c.status is not ProofStatus.PROVED]
        bad += [p.name for p in self.paper_expected if not p.ok]
        return bad


_STRICT = {">": True, "<": True, ">=": False, "<=": False}


@dataclass
class StepBuilder:
    step_id: str
    computed: list = field(default_factory=list)
    paper_expected: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    parameters: list = field(default_factory=list)

    def param(self, name: str, value) -> None:
        self.parameters.append((name, str(value)))

    def value(self, name: str, enc) -> Interval:
        enc = as_interval(enc)
        self.computed.append((name, enc))
        return enc

    def paper(self, name: str, enc, printed: str, tol=None, exact_value=None) -> Interval:
        enc = self.value(name, enc if exact_value is None else Interval.from_fraction(exact_value))
        tol = paper_tolerance(printed) if tol is None else Fraction(tol)
        self.paper_expected.append(PaperValue(name, enc, printed, tol,
                                              None if exact_value is None else Fraction(exact_value)))
        return enc

    def sign(self, name: str, proof: SignProof) -> SignProof:
        strict = proof.claim in (">0", "<0")
        detail = f"{proof.claim} on {', '.join(str(d) for d in proof.domain)}: {proof.leaves} leaves"
        if not proof.proved:
            detail += f"; {proof.status.value} at {proof.witness} -> {proof.witness_value}"
        self.checks.append(Check(name, proof.status,
                                 proof.margin if (strict and proof.proved) else None, detail))
        return proof

    def compare(self, name: str, enc, rel: str, bound=0) -> bool:
        """Scalar check ``enc rel bound`` decided on the enclosure."""
        diff = as_interval(enc) - as_interval(bound)
        if rel in (">", ">="):
            slack, holds = diff.lo, (diff.lo > 0 if rel == ">" else diff.lo >= 0)
            broken = diff.hi <= 0 if rel == ">" else diff.hi < 0
        elif rel in ("<", "<="):
            slack, holds = -diff.hi, (diff.hi < 0 if rel == "<" else diff.hi <= 0)
            broken = diff.lo >= 0 if rel == "<" else diff.lo > 0
        else:
            raise ValueError(rel)
        status = (ProofStatus.PROVED if holds else
                  ProofStatus.REFUTED if broken else ProofStatus.INCONCLUSIVE)
        margin = slack if (_STRICT[rel] and holds) else None
        self.checks.append(Check(name, status, margin, f"{as_interval(enc)} {rel} {bound}"))
        return holds

    def exact(self, name: str, lhs: Fraction, rel: str, rhs: Fraction = Fraction(0)) -> bool:
        """Check decided in exact rational arithmetic."""
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        holds = {">": lhs > rhs, "<": lhs < rhs, ">=": lhs >= rhs,
                 "<=": lhs <= rhs, "==": lhs == rhs}[rel]
        margin = None
        if holds and rel in (">", "<"):
            margin = float(abs(lhs - rhs))
        status = ProofStatus.PROVED if holds else ProofStatus.REFUTED
        self.checks.append(Check(name, status, margin, f"{lhs} {rel} {rhs} (exact)"))
        return holds

    def sub_result(self, name: str, res: "StepResult") -> None:
        """Fold in a proof object produced elsewhere (e.g. a sandwich certificate)."""
        self.checks.append(Check(name, res.status, None, f"see {res.step_id}"))

    def result(self) -> StepResult:
        statuses = [c.status for c in self.checks]
        if ProofStatus.REFUTED in statuses:
            status = ProofStatus.REFUTED
        elif ProofStatus.INCONCLUSIVE in statuses or not all(p.ok for p in self.paper_expected):
            status = ProofStatus.INCONCLUSIVE
        else:
            status = ProofStatus.PROVED
        margins = [c.margin for c in self.checks if c.margin is not None]
        margin = min(margins) if margins else math.nan
        return StepResult(self.step_id, status, tuple(self.computed), tuple(self.paper_expected),
                          tuple(self.checks), margin, tuple(self.parameters))

"""Adaptive bisection proofs of sign conditions over intervals and boxes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .interval import DivisorContainsZero, Interval

__all__ = [
    "ProofStatus",
    "SignProof",
    "DepthExceeded",
    "ClaimRefuted",
    "CLAIMS",
    "prove_sign_on_interval",
    "prove_sign_on_box",
    "DEFAULT_MAX_DEPTH",
]

DEFAULT_MAX_DEPTH = 40
DEFAULT_MAX_EVALS = 400_000

CLAIMS = (">=0", ">0", "<=0", "<0")


class ProofStatus(str, Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


class DepthExceeded(RuntimeError):
    """Subdivision hit its depth or evaluation budget; the claim is undecided."""


class ClaimRefuted(RuntimeError):
    """A point evaluation certifies that the claim is false."""


@dataclass(frozen=True)
class SignProof:
    status: ProofStatus
    claim: str
    domain: tuple[Interval, ...]
    leaves: int
    evaluations: int
    depth: int
    # smallest distance from a leaf enclosure to the violating half-line
    margin: float
    witness: tuple[Interval, ...] | None = None
    witness_value: Interval | None = None

    def __bool__(self) -> bool:
        return self.status is ProofStatus.PROVED

    @property
    def proved(self) -> bool:
        return self.status is ProofStatus.PROVED

    def require(self) -> "SignProof":
        if self.status is ProofStatus.REFUTED:
            raise ClaimRefuted(f"{self.claim} fails at {self.witness}: value {self.witness_value}")
        if self.status is ProofStatus.INCONCLUSIVE:
            raise DepthExceeded(f"{self.claim} undecided on {self.witness} (enclosure {self.witness_value})")
        return self


def _judge(claim: str, v: Interval) -> tuple[bool, bool, float]:
    """(holds, certainly violated, slack) for one enclosure."""
    if claim == ">=0":
        return v.lo >= 0.0, v.hi < 0.0, v.lo
    if claim == ">0":
        return v.lo > 0.0, v.hi <= 0.0, v.lo
    if claim == "<=0":
        return v.hi <= 0.0, v.lo > 0.0, -v.hi
    if claim == "<0":
        return v.hi < 0.0, v.lo >= 0.0, -v.hi
    raise ValueError(f"unknown claim {claim!r}; expected one of {CLAIMS}")


def _mean_value(fn, grad, box: tuple[Interval, ...]) -> Interval | None:
    centre = tuple(Interval._raw(b.mid, b.mid) for b in box)
    try:
        acc = fn(*centre)
        for g, b, c in zip(grad(*box), box, centre):
            acc = acc + g * (b - c)
    except DivisorContainsZero:
        return None
    return acc


def prove_sign_on_box(
    fn: Callable[..., Interval],
    box: Sequence[Interval],
    claim: str,
    max_depth: int = DEFAULT_MAX_DEPTH,
    gradient: Callable[..., Sequence[Interval]] | None = None,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> SignProof:
    """Prove ``fn(*x) <claim>`` for every x in the box by bisection.

    ``fn`` maps interval arguments to an enclosure of its range and may raise
    ``DivisorContainsZero`` to ask for further subdivision.  If ``gradient``
    is given, the mean-value form is intersected with the natural enclosure.
    Each subdivision halves the widest coordinate; ``max_depth`` bounds the
    number of halvings along any path.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    box = tuple(box)
    _judge(claim, box[0])  # validates the claim string
    stack = [(box, 0)]
    leaves = evals = deepest = 0
    margin = float("inf")
    while stack:
        cell, depth = stack.pop()
        deepest = max(deepest, depth)
        evals += 1
        try:
            v = fn(*cell)
        except DivisorContainsZero:
            v = None
        if v is not None and gradient is not None and depth > 0:
            mv = _mean_value(fn, gradient, cell)
            if mv is not None:
                v = v.intersect(mv) or v
        if v is not None:
            ok, _, slack = _judge(claim, v)
            if ok:
                leaves += 1
                margin = min(margin, slack)
                continue
        # look for a certified counterexample at the centre
        centre = tuple(Interval._raw(b.mid, b.mid) for b in cell)
        try:
            cv = fn(*centre)
        except DivisorContainsZero:
            cv = None
        if cv is not None and _judge(claim, cv)[1]:
            return SignProof(ProofStatus.REFUTED, claim, box, leaves, evals, deepest,
                             margin, centre, cv)
        if depth >= max_depth or evals >= max_evals:
            return SignProof(ProofStatus.INCONCLUSIVE, claim, box, leaves, evals, deepest,
                             margin, cell, v)
        k = max(range(len(cell)), key=lambda i: cell[i].hi - cell[i].lo)
        left, right = cell[k].bisect()
        if left.hi - left.lo == cell[k].hi - cell[k].lo:
            return SignProof(ProofStatus.INCONCLUSIVE, claim, box, leaves, evals, deepest,
                             margin, cell, v)
        stack.append((cell[:k] + (right,) + cell[k + 1:], depth + 1))
        stack.append((cell[:k] + (left,) + cell[k + 1:], depth + 1))
    return SignProof(ProofStatus.PROVED, claim, box, leaves, evals, deepest, margin)


def prove_sign_on_interval(
    fn: Callable[[Interval], Interval],
    domain: Interval,
    claim: str,
    max_depth: int = DEFAULT_MAX_DEPTH,
    derivative: Callable[[Interval], Interval] | None = None,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> SignProof:
    """One-dimensional case of :func:`prove_sign_on_box`."""
    grad = None if derivative is None else (lambda x: (derivative(x),))
    return prove_sign_on_box(fn, (domain,), claim, max_depth=max_depth,
                             gradient=grad, max_evals=max_evals)

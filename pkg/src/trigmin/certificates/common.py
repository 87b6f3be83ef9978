"""Shared constants and small helpers for the step verifiers."""

from __future__ import annotations

import random
from fractions import Fraction

from ..interval import HALF_PI, PI, Interval, as_interval
from ..model import PairMN, SineSum, denominator, g_at_zero
from ..prover import SignProof, prove_sign_on_interval

T_FAR = Fraction("5.78")  # outer radius (times 1/m) of the neighbourhoods of 0 and pi
T_MID = Fraction("2.8")  # split point (times 1/m) of the neighbourhood of pi
THREE_HALVES = Fraction(3, 2)


def I(x) -> Interval:
    """Enclosure of an exact rational (or str/int) constant."""
    if isinstance(x, Interval):
        return x
    return Interval.from_fraction(x)


def three_pi_over_two() -> Interval:
    return PI * I(THREE_HALVES)


def span(a, b) -> Interval:
    """Interval from the lower end of ``a`` to the upper end of ``b``."""
    a, b = as_interval(a), as_interval(b)
    return Interval(a.lo, b.hi)


def inner_span(a, b) -> Interval:
    """Interval from the upper end of ``a`` to the lower end of ``b``.

    Contained in every [x, y] with x in a and y in b; used when the claimed
    region is bounded by inexact endpoints and must not be over-covered.
    """
    a, b = as_interval(a), as_interval(b)
    return Interval(a.hi, b.lo)


def excess_g(pair: PairMN) -> SineSum:
    """``D(x) * (g(x) - g(0))`` as a sum of sines."""
    m, n = pair.m, pair.n
    return SineSum.of((n, m), (-m, n)) - denominator(pair).scaled(g_at_zero(pair))


def excess_g_tilde(pair: PairMN) -> SineSum:
    """``D(y) * (g(y + pi) - g(0))`` with ``g(y + pi) = (n sin my + m sin ny)/D(y)``."""
    m, n = pair.m, pair.n
    return SineSum.of((n, m), (m, n)) - denominator(pair).scaled(g_at_zero(pair))


def prove_sum_nonnegative(s: SineSum, domain: Interval, max_depth: int,
                          claim: str = ">=0") -> SignProof:
    return prove_sign_on_interval(s.enclosure, domain, claim, max_depth=max_depth,
                                  derivative=s.derivative_value)


def prove_sum_on_half_period(s: SineSum, max_depth: int, claim: str = ">=0") -> tuple[SignProof, SignProof]:
    """Sign of ``s`` on [0, pi] as two proofs on [0, pi/2]: for x and for pi - x.

    Working with the reflected sum keeps x = pi exactly representable, so the
    outward-rounded pi never pushes the domain past the half period.
    """
    half = span(0, HALF_PI)
    return (prove_sum_nonnegative(s, half, max_depth, claim),
            prove_sum_nonnegative(s.reflected(), half, max_depth, claim))


def sample_points(seed: int, lo: float, hi: float, count: int) -> list[float]:
    rng = random.Random(seed)
    return sorted(rng.uniform(lo, hi) for _ in range(count))


def overlaps(a: Interval, b: Interval) -> bool:
    return a.lo <= b.hi and b.lo <= a.hi

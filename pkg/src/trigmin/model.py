"""The trigonometric ratio f, its rescaling g, and the sine sandwiches.

    f(x) = (n sin x - sin nx) / (m sin x - sin mx)
    g(x) = m f(x) - n = (n sin mx - m sin nx) / (m sin x - sin mx)
    g~(x) = g(x + pi)

Both numerators and the denominator are finite sums ``sum c_j sin(k_j x)``
(:class:`SineSum`).  Where the denominator enclosure touches zero, which only
happens near multiples of pi, the sums are replaced by their Taylor series at
the nearest multiple of pi with an explicit Lagrange remainder, and the common
power of the local variable is cancelled exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .interval import (
    PI, UNIT, DivisorContainsZero, Interval, as_interval, sin_enclosure,
)
from .poly import PolyCoeffs, horner_eval, trig_minus_poly
from .prover import DEFAULT_MAX_DEPTH, SignProof, prove_sign_on_interval

__all__ = [
    "LAMBDA_MIN",
    "LAMBDA_MAX",
    "LAMBDA_MAX_NEAR",
    "M_MIN",
    "PairMN",
    "ScopeError",
    "DenominatorMayVanish",
    "SineSum",
    "eval_ratio",
    "eval_f",
    "eval_g",
    "eval_g_tilde",
    "f_at_zero",
    "g_at_zero",
    "SineBoundPoly",
    "certify_sine_bound",
    "SINE_BOUNDS",
    "BmnReference",
    "b_mn_reference",
]

LAMBDA_MIN = Fraction(1, 2)
LAMBDA_MAX = Fraction("0.8194")  # slope bound of the theorem
LAMBDA_MAX_NEAR = Fraction("0.82")  # slope bound used by the near-0 / far-region steps
M_MIN = 81


class ScopeError(ValueError):
    """The pair is outside the hypotheses of the theorem being verified."""


class DenominatorMayVanish(ArithmeticError):
    """The denominator enclosure contains zero; subdivide or move away from the pole."""


@dataclass(frozen=True)
class PairMN:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("m and n must be integers")
        if not self.m > self.n >= 2:
            raise ValueError(f"need m > n >= 2, got m={self.m}, n={self.n}")

    @property
    def lam(self) -> Fraction:
        return Fraction(self.n, self.m)

    @property
    def nu(self) -> Fraction:
        return self.lam ** 2

    def scope_violations(self) -> list[str]:
        out = []
        if self.m % 2 == 0:
            out.append("m must be odd")
        if self.n % 2 == 1:
            out.append("n must be even")
        if self.lam < LAMBDA_MIN:
            out.append("n/m must be >= 0.5")
        if self.lam > LAMBDA_MAX:
            out.append("n/m must be <= 0.8194")
        if self.m < M_MIN:
            out.append("m must be >= 81")
        return out

    @property
    def theorem_scope(self) -> bool:
        return not self.scope_violations()

    def require_scope(self) -> None:
        bad = self.scope_violations()
        if bad:
            raise ScopeError(f"(m={self.m}, n={self.n}) out of scope: " + "; ".join(bad))

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n})"


def f_at_zero(pair: PairMN) -> Fraction:
    m, n = pair.m, pair.n
    return Fraction(n ** 3 - n, m ** 3 - m)


def g_at_zero(pair: PairMN) -> Fraction:
    m, n = pair.m, pair.n
    return Fraction(-n * (m * m - n * n), m * m - 1)


# --------------------------------------------------------------------------
# sums of sines

SERIES_REACH = 1.5  # use local series while max|freq * y| stays below this
SERIES_DEGREE = 41


@dataclass(frozen=True)
class SineSum:
    """``sum(c * sin(k * x) for c, k in terms)`` with exact coefficients."""

    terms: tuple[tuple[Fraction, int], ...]

    @classmethod
    def of(cls, *terms) -> "SineSum":
        return cls(tuple((Fraction(c), int(k)) for c, k in terms))

    @property
    def max_freq(self) -> int:
        return max(abs(k) for _, k in self.terms)

    def __sub__(self, other: "SineSum") -> "SineSum":
        return SineSum(self.terms + tuple((-c, k) for c, k in other.terms))

    def scaled(self, s) -> "SineSum":
        s = Fraction(s)
        return SineSum(tuple((c * s, k) for c, k in self.terms))

    def shifted(self, j: int) -> "SineSum":
        """The sum as a function of y where x = j*pi + y."""
        return SineSum(tuple((c if (k * j) % 2 == 0 else -c, k) for c, k in self.terms))

    def reflected(self) -> "SineSum":
        """The sum as a function of y where x = pi - y."""
        return SineSum(tuple((c if k % 2 else -c, k) for c, k in self.terms))

    def value(self, x) -> Interval:
        x = as_interval(x)
        acc = None
        for c, k in self.terms:
            t = Interval.from_fraction(c) * sin_enclosure(x * k)
            acc = t if acc is None else acc + t
        return acc

    def derivative_value(self, x) -> Interval:
        from .interval import cos_enclosure
        x = as_interval(x)
        acc = None
        for c, k in self.terms:
            t = Interval.from_fraction(c * k) * cos_enclosure(x * k)
            acc = t if acc is None else acc + t
        return acc

    @cached_property
    def _series(self) -> tuple[int | None, PolyCoeffs, Interval]:
        """(order, reduced series, remainder coefficient) at y = 0."""
        coeffs = []
        for d in range(SERIES_DEGREE + 1):
            if d % 2 == 0:
                coeffs.append(Fraction(0))
                continue
            s = sum(c * Fraction(k) ** d for c, k in self.terms)
            coeffs.append(s * Fraction((-1) ** (d // 2), math.factorial(d)))
        series = PolyCoeffs(tuple(coeffs))
        order = series.lowest_degree()
        # sin(k y) - T_D(k y) is bounded by |k y|^(D+2)/(D+2)! (D odd)
        r = sum(abs(c) * Fraction(abs(k)) ** (SERIES_DEGREE + 2) for c, k in self.terms)
        rem = Interval.from_fraction(r / math.factorial(SERIES_DEGREE + 2))
        reduced = series.shift_down(order) if order is not None else PolyCoeffs(())
        return order, reduced, rem

    @property
    def order(self) -> int | None:
        return self._series[0]

    def factored(self, y: Interval) -> tuple[int | None, Interval]:
        """``(k, R)`` with ``sum(y) in y**k * R`` for small ``y``."""
        order, reduced, rem = self._series
        if order is None:
            # identically zero series: only the remainder is left
            return SERIES_DEGREE + 2, UNIT * rem
        tail = (y ** (SERIES_DEGREE + 2 - order)) * UNIT * rem
        return order, horner_eval(reduced, y) + tail

    def enclosure(self, x) -> Interval:
        """Range enclosure that stays sign-decidable near multiples of pi."""
        x = as_interval(x)
        local = _local_variable(x, self.max_freq)
        if local is None:
            return self.value(x)
        j, y = local
        k, r = self.shifted(j).factored(y)
        out = (y ** k) * r
        return out.intersect(self.value(x)) or out


def _local_variable(x: Interval, max_freq: int) -> tuple[int, Interval] | None:
    j = round(x.mid / math.pi)
    y = x - PI * j
    if y.mag * max_freq > SERIES_REACH:
        return None
    return j, y


def eval_ratio(num: SineSum, den: SineSum, x) -> Interval:
    """Enclosure of ``num(x) / den(x)`` with series fallback near multiples of pi."""
    x = as_interval(x)
    d = den.value(x)
    if not (d.lo <= 0.0 <= d.hi):
        return num.value(x) / d
    local = _local_variable(x, max(num.max_freq, den.max_freq))
    if local is None:
        raise DenominatorMayVanish(f"denominator enclosure {d} contains 0 on {x}")
    j, y = local
    kn, rn = num.shifted(j).factored(y)
    kd, rd = den.shifted(j).factored(y)
    try:
        if kn >= kd:
            return (y ** (kn - kd)) * rn / rd
        if y.lo > 0.0 or y.hi < 0.0:
            return rn / ((y ** (kd - kn)) * rd)
    except DivisorContainsZero:
        pass
    raise DenominatorMayVanish(f"pole or unresolved zero of the denominator on {x}")


@lru_cache(maxsize=None)
def _sums(pair: PairMN) -> tuple[SineSum, SineSum, SineSum]:
    m, n = pair.m, pair.n
    num_f = SineSum.of((n, 1), (-1, n))
    num_g = SineSum.of((n, m), (-m, n))
    den = SineSum.of((m, 1), (-1, m))
    return num_f, num_g, den


def numerator_f(pair: PairMN) -> SineSum:
    return _sums(pair)[0]


def numerator_g(pair: PairMN) -> SineSum:
    return _sums(pair)[1]


def denominator(pair: PairMN) -> SineSum:
    return _sums(pair)[2]


def eval_f(pair: PairMN, x) -> Interval:
    num, _, den = _sums(pair)
    return eval_ratio(num, den, x)


def eval_g(pair: PairMN, x) -> Interval:
    _, num, den = _sums(pair)
    return eval_ratio(num, den, x)


def eval_g_tilde(pair: PairMN, x) -> Interval:
    """``g(x + pi)`` with the shift applied exactly to every sine term."""
    _, num, den = _sums(pair)
    return eval_ratio(num.shifted(1), den.shifted(1), x)


# --------------------------------------------------------------------------
# sine sandwiches


@dataclass(frozen=True)
class SineBoundPoly:
    """``poly(x - shift_pi * pi)`` bounding sin from one side on ``validity``."""

    name: str
    poly: PolyCoeffs
    side: str  # "lower" | "upper"
    validity: Interval
    shift_pi: Fraction = Fraction(0)  # shift as a multiple of pi

    def __post_init__(self):
        if self.side not in ("lower", "upper"):
            raise ValueError(self.side)
        if (2 * self.shift_pi).denominator != 1:
            raise ValueError("shift must be a multiple of pi/2")

    def local(self, x) -> Interval:
        x = as_interval(x)
        if self.shift_pi == 0:
            return x
        return x - PI * Interval.from_fraction(self.shift_pi)

    def evaluate(self, x) -> Interval:
        return horner_eval(self.poly, self.local(x))

    def gap(self, x) -> Interval:
        """Enclosure of ``sin(x) - bound(x)``."""
        y = self.local(x)
        quarter = int(2 * self.shift_pi) % 4
        # sin(y + q*pi/2) = sin y, cos y, -sin y, -cos y
        kind = "sin" if quarter % 2 == 0 else "cos"
        if quarter in (0, 1):
            return trig_minus_poly(kind, self.poly, y)
        return -trig_minus_poly(kind, -self.poly, y)


@lru_cache(maxsize=None)
def certify_sine_bound(b: SineBoundPoly, max_depth: int = DEFAULT_MAX_DEPTH) -> SignProof:
    claim = ">=0" if b.side == "lower" else "<=0"
    return prove_sign_on_interval(b.gap, b.validity, claim, max_depth=max_depth)


def _taylor_like(*pairs) -> PolyCoeffs:
    out = [Fraction(0)] * (max(d for d, _ in pairs) + 1)
    for d, c in pairs:
        out[d] = Fraction(c)
    return PolyCoeffs(tuple(out))


_F = math.factorial
SANDWICH_RANGE = Interval(0.0, Interval.from_fraction(Fraction("5.78")).hi)

NEAR_ZERO_LOWER = SineBoundPoly(
    "s1_deg9", _taylor_like((1, 1), (3, Fraction(-1, _F(3))), (5, Fraction(1, _F(5))),
                            (7, Fraction(-1, _F(7))), (9, Fraction(1, 482800))),
    "lower", SANDWICH_RANGE)
NEAR_ZERO_UPPER = SineBoundPoly(
    "s2_deg9", _taylor_like((1, 1), (3, Fraction(-1, _F(3))), (5, Fraction(1, _F(5))),
                            (7, Fraction(-1, _F(7))), (9, Fraction(1, _F(9)))),
    "upper", SANDWICH_RANGE)
CUBIC_LOWER = SineBoundPoly(
    "s1_deg3", _taylor_like((1, 1), (3, Fraction(-1, 6))), "lower", SANDWICH_RANGE)
QUINTIC_UPPER = SineBoundPoly(
    "s2_deg5", _taylor_like((1, 1), (3, Fraction(-1, 6)), (5, Fraction(1, 120))),
    "upper", SANDWICH_RANGE)
QUARTIC_LOWER = SineBoundPoly(
    "s1_quartic_3pi2", _taylor_like((0, -1), (2, Fraction(1, 2)), (4, Fraction(-1, 24))),
    "lower", SANDWICH_RANGE, Fraction(3, 2))
QUADRATIC_UPPER = SineBoundPoly(
    "s2_quadratic_3pi2", _taylor_like((0, -1), (2, Fraction(1, 2))),
    "upper", SANDWICH_RANGE, Fraction(3, 2))

SINE_BOUNDS = {
    "near_zero": (NEAR_ZERO_LOWER, NEAR_ZERO_UPPER),
    "near_pi_small": (CUBIC_LOWER, QUINTIC_UPPER),
    "near_pi_large": (QUARTIC_LOWER, QUADRATIC_UPPER),
}


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BmnReference:
    """What B_mn = min_x f(x) means for one pair, and what is known about it."""

    pair: PairMN
    f_at_zero: Fraction
    search_interval: tuple[float, float] = (0.0, math.pi)
    known_value: Fraction | None = None
    reason: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)


def b_mn_reference(pair: PairMN) -> BmnReference:
    f0 = f_at_zero(pair)
    notes = ("f is even and 2*pi-periodic, so the minimum over R is the minimum over [0, pi]",)
    if pair.m % 2 == 0 and pair.n % 2 == 1:
        return BmnReference(pair, f0, known_value=Fraction(0),
                            reason="m even, n odd: f(pi) = 0 and f >= 0", notes=notes)
    if pair.theorem_scope:
        return BmnReference(pair, f0, known_value=f0,
                            reason="theorem hypotheses hold: B_mn = f(0)", notes=notes)
    if (pair.m - pair.n) % 2 == 0:
        return BmnReference(pair, f0, known_value=f0,
                            reason="same parity: B_mn = f(0) by earlier work", notes=notes)
    if pair.n <= (pair.m + 1) // 2:
        return BmnReference(pair, f0, known_value=f0,
                            reason="m odd, n even, n <= (m+1)/2: B_mn = f(0) by earlier work",
                            notes=notes)
    return BmnReference(pair, f0, reason="no closed form known; see the oracle", notes=notes)

"""Outward-rounded interval arithmetic on binary64 endpoints.

Every operation returns an interval that contains the exact real result.
Rounding is realized without touching the FPU rounding mode: each endpoint is
computed in round-to-nearest, its rounding error is recovered with an
error-free transformation (TwoSum / Dekker TwoProduct), and the endpoint is
moved one ulp outward only when the error points the wrong way.  Operations
that happen to be exact therefore stay exact, e.g. ``[1,2] + [3,4] == [4,6]``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial, inf, nextafter
from numbers import Rational

__all__ = [
    "Interval",
    "DivisorContainsZero",
    "DomainError",
    "PI",
    "HALF_PI",
    "TWO_PI",
    "ZERO",
    "ONE",
    "UNIT",
    "as_interval",
    "sin_enclosure",
    "cos_enclosure",
    "arccos_enclosure",
]


class DivisorContainsZero(ZeroDivisionError):
    pass


class DomainError(ValueError):
    pass


# --------------------------------------------------------------------------
# error-free transformations

_SPLITTER = 134217729.0  # 2**27 + 1
# Dekker splitting is exact only away from overflow/underflow.
_SAFE_HI = 2.0 ** 500
_SAFE_LO = 2.0 ** -450


def _two_sum_err(a: float, s: float, b: float) -> float:
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod_err(a: float, b: float, p: float) -> float | None:
    """Exact error ``a*b - p`` or None when it cannot be certified."""
    if p == 0.0:
        return 0.0 if (a == 0.0 or b == 0.0) else None
    ap, bp, pp = abs(a), abs(b), abs(p)
    if not (ap < _SAFE_HI and bp < _SAFE_HI and _SAFE_LO < pp < _SAFE_HI):
        return None
    ah, al = _split(a)
    bh, bl = _split(b)
    return al * bl - (((p - ah * bh) - al * bh) - ah * bl)


def _add_down(a: float, b: float) -> float:
    s = a + b
    if s == inf or s == -inf or s != s:
        return nextafter(s, -inf) if s == inf else s
    e = _two_sum_err(a, s, b)
    return s if e >= 0.0 else nextafter(s, -inf)


def _add_up(a: float, b: float) -> float:
    s = a + b
    if s == inf or s == -inf or s != s:
        return nextafter(s, inf) if s == -inf else s
    e = _two_sum_err(a, s, b)
    return s if e <= 0.0 else nextafter(s, inf)


def _mul_down(a: float, b: float) -> float:
    p = a * b
    e = _two_prod_err(a, b, p)
    if e is not None and e >= 0.0:
        return p
    r = nextafter(p, -inf)
    # an underflowed product of same-signed factors must not step below 0
    return 0.0 if r < 0.0 and (a >= 0.0) == (b >= 0.0) else r


def _mul_up(a: float, b: float) -> float:
    p = a * b
    e = _two_prod_err(a, b, p)
    if e is not None and e <= 0.0:
        return p
    r = nextafter(p, inf)
    return 0.0 if r > 0.0 and (a >= 0.0) != (b >= 0.0) else r


def _div_dir(a: float, b: float) -> tuple[float, int]:
    """Quotient and the sign of (exact - computed); 2 means unknown."""
    q = a / b
    if q == 0.0:
        return q, (0 if a == 0.0 else 2)
    e = _two_prod_err(q, b, q * b)
    if e is None:
        return q, 2
    r = (a - q * b) - e  # exact remainder a - q*b
    if r == 0.0:
        return q, 0
    return q, (1 if (r > 0.0) == (b > 0.0) else -1)


def _div_down(a: float, b: float) -> float:
    q, d = _div_dir(a, b)
    return q if d in (0, 1) else nextafter(q, -inf)


def _div_up(a: float, b: float) -> float:
    q, d = _div_dir(a, b)
    return q if d in (0, -1) else nextafter(q, inf)


def _pow_down(a: float, k: int) -> float:
    r = a
    for _ in range(k - 1):
        r = _mul_down(r, a)
    return r


def _pow_up(a: float, k: int) -> float:
    r = a
    for _ in range(k - 1):
        r = _mul_up(r, a)
    return r


def _frac_bounds(q: Fraction) -> tuple[float, float]:
    f = float(q)  # correctly rounded
    fq = Fraction(f)
    if fq == q:
        return f, f
    if fq < q:
        return f, nextafter(f, inf)
    return nextafter(f, -inf), f


# --------------------------------------------------------------------------


class Interval:
    """Closed interval ``[lo, hi]``; treat instances as immutable."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if lo != lo or hi != hi:
            raise ValueError("interval endpoint is NaN")
        if lo > hi:
            raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def _raw(cls, lo: float, hi: float) -> "Interval":
        obj = object.__new__(cls)
        obj.lo = lo
        obj.hi = hi
        return obj

    # construction ---------------------------------------------------------

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    @classmethod
    def from_fraction(cls, q) -> "Interval":
        """Tightest binary64 enclosure of an exact rational (or int/str)."""
        if isinstance(q, str):
            q = Fraction(q)
        elif isinstance(q, int):
            if abs(q) <= 2 ** 53:
                return cls._raw(float(q), float(q))
            q = Fraction(q)
        lo, hi = _frac_bounds(Fraction(q))
        return cls._raw(lo, hi)

    @classmethod
    def hull(cls, *items: "Interval") -> "Interval":
        return cls._raw(min(i.lo for i in items), max(i.hi for i in items))

    # inspection -----------------------------------------------------------

    @property
    def mid(self) -> float:
        if self.lo == -inf or self.hi == inf:
            raise ValueError("midpoint of an unbounded interval")
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def width(self) -> float:
        return _add_up(self.hi, -self.lo)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self) -> float:
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Rational) and not isinstance(x, int):
            x = Fraction(x)
        return self.lo <= x <= self.hi

    def subset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval._raw(lo, hi) if lo <= hi else None

    def bisect(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval._raw(self.lo, m), Interval._raw(m, self.hi)

    def __eq__(self, other) -> bool:
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo:.17g}, {self.hi:.17g}]"

    # arithmetic -----------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval._raw(-self.hi, -self.lo)

    def __pos__(self) -> "Interval":
        return self

    def __abs__(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval._raw(0.0, max(-self.lo, self.hi))

    def __add__(self, other) -> "Interval":
        o = as_interval(other)
        return Interval._raw(_add_down(self.lo, o.lo), _add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = as_interval(other)
        return Interval._raw(_add_down(self.lo, -o.hi), _add_up(self.hi, -o.lo))

    def __rsub__(self, other) -> "Interval":
        return as_interval(other) - self

    def __mul__(self, other) -> "Interval":
        o = as_interval(other)
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        if a >= 0.0:
            if c >= 0.0:
                return Interval._raw(_mul_down(a, c), _mul_up(b, d))
            if d <= 0.0:
                return Interval._raw(_mul_down(b, c), _mul_up(a, d))
            return Interval._raw(_mul_down(b, c), _mul_up(b, d))
        if b <= 0.0:
            if c >= 0.0:
                return Interval._raw(_mul_down(a, d), _mul_up(b, c))
            if d <= 0.0:
                return Interval._raw(_mul_down(b, d), _mul_up(a, c))
            return Interval._raw(_mul_down(a, d), _mul_up(a, c))
        if c >= 0.0:
            return Interval._raw(_mul_down(a, d), _mul_up(b, d))
        if d <= 0.0:
            return Interval._raw(_mul_down(b, c), _mul_up(a, c))
        lo = min(_mul_down(a, d), _mul_down(b, c))
        hi = max(_mul_up(a, c), _mul_up(b, d))
        return Interval._raw(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = as_interval(other)
        c, d = o.lo, o.hi
        if c <= 0.0 <= d:
            raise DivisorContainsZero(f"divisor {o} contains zero")
        a, b = self.lo, self.hi
        if c > 0.0:
            if a >= 0.0:
                return Interval._raw(_div_down(a, d), _div_up(b, c))
            if b <= 0.0:
                return Interval._raw(_div_down(a, c), _div_up(b, d))
            return Interval._raw(_div_down(a, c), _div_up(b, c))
        if a >= 0.0:
            return Interval._raw(_div_down(b, d), _div_up(a, c))
        if b <= 0.0:
            return Interval._raw(_div_down(b, c), _div_up(a, d))
        return Interval._raw(_div_down(b, d), _div_up(a, d))

    def __rtruediv__(self, other) -> "Interval":
        return as_interval(other) / self

    def div_extended(self, other) -> "Interval":
        """Division that answers the unbounded line instead of raising."""
        try:
            return self / other
        except DivisorContainsZero:
            return ENTIRE

    def __pow__(self, k: int) -> "Interval":
        if not isinstance(k, int) or k < 0:
            raise TypeError("only non-negative integer powers are supported")
        if k == 0:
            return ONE
        if k == 1:
            return self
        lo, hi = self.lo, self.hi
        if lo >= 0.0:
            return Interval._raw(_pow_down(lo, k), _pow_up(hi, k))
        if hi <= 0.0:
            if k % 2 == 0:
                return Interval._raw(_pow_down(-hi, k), _pow_up(-lo, k))
            return Interval._raw(-_pow_up(-lo, k), -_pow_down(-hi, k))
        if k % 2 == 0:
            return Interval._raw(0.0, _pow_up(max(-lo, hi), k))
        return Interval._raw(-_pow_up(-lo, k), _pow_up(hi, k))

    def sqr(self) -> "Interval":
        return self ** 2


def as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, float):
        if x != x:
            raise ValueError("NaN")
        return Interval._raw(x, x)
    if isinstance(x, (int, Fraction, str)):
        return Interval.from_fraction(x)
    if isinstance(x, Rational):
        return Interval.from_fraction(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to Interval")


ZERO = Interval._raw(0.0, 0.0)
ONE = Interval._raw(1.0, 1.0)
UNIT = Interval._raw(-1.0, 1.0)
ENTIRE = Interval._raw(-inf, inf)

# math.pi is the binary64 number just below pi.
PI = Interval._raw(math.pi, nextafter(math.pi, inf))
HALF_PI = Interval._raw(math.pi / 2, nextafter(math.pi / 2, inf))
TWO_PI = Interval._raw(2 * math.pi, nextafter(2 * math.pi, inf))


# --------------------------------------------------------------------------
# sin / cos

_TERMS = 11  # |r| <= pi/4: remainder below 1e-24
_SIN_COEFFS = [Interval.from_fraction(Fraction((-1) ** j, factorial(2 * j + 1))) for j in range(_TERMS)]
_COS_COEFFS = [Interval.from_fraction(Fraction((-1) ** j, factorial(2 * j))) for j in range(_TERMS)]
_SIN_REM = Interval.from_fraction(Fraction(1, factorial(2 * _TERMS + 1)))
_COS_REM = Interval.from_fraction(Fraction(1, factorial(2 * _TERMS)))


def _horner_even(coeffs: list[Interval], z: Interval) -> Interval:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _sin_reduced(r: Interval) -> Interval:
    if r.lo == 0.0 and r.hi == 0.0:
        return ZERO
    s = _horner_even(_SIN_COEFFS, r * r) * r
    bound = (Interval._raw(r.mag, r.mag) ** (2 * _TERMS + 1) * _SIN_REM).hi
    return Interval._raw(_add_down(s.lo, -bound), _add_up(s.hi, bound))


def _cos_reduced(r: Interval) -> Interval:
    c = _horner_even(_COS_COEFFS, r * r)
    if r.lo == 0.0 and r.hi == 0.0:
        return c
    bound = (Interval._raw(r.mag, r.mag) ** (2 * _TERMS) * _COS_REM).hi
    return Interval._raw(_add_down(c.lo, -bound), _add_up(c.hi, bound))


def _reduce(x: float) -> tuple[int, Interval]:
    k = round(x / (math.pi / 2))
    if k == 0:
        return 0, Interval._raw(x, x)
    return k, Interval._raw(x, x) - HALF_PI * k


def _sin_point(x: float) -> Interval:
    k, r = _reduce(x)
    q = k % 4
    if q == 0:
        return _sin_reduced(r)
    if q == 1:
        return _cos_reduced(r)
    if q == 2:
        return -_sin_reduced(r)
    return -_cos_reduced(r)


def _cos_point(x: float) -> Interval:
    k, r = _reduce(x)
    q = k % 4
    if q == 0:
        return _cos_reduced(r)
    if q == 1:
        return -_sin_reduced(r)
    if q == 2:
        return -_cos_reduced(r)
    return _sin_reduced(r)


def _clip(v: Interval) -> Interval:
    return Interval._raw(max(v.lo, -1.0), min(v.hi, 1.0))


def _critical_indices(x: Interval, offset: Interval | None) -> range:
    """Integers j such that ``offset + j*pi`` may lie in x."""
    lo = Interval._raw(x.lo, x.lo)
    hi = Interval._raw(x.hi, x.hi)
    if offset is not None:
        lo = lo - offset
        hi = hi - offset
    a = lo / PI
    b = hi / PI
    return range(math.ceil(a.lo), math.floor(b.hi) + 1)


def sin_enclosure(x) -> Interval:
    """Enclosure of ``{sin t : t in x}``."""
    x = as_interval(x)
    if x.lo == -inf or x.hi == inf or x.width >= TWO_PI.lo:
        return UNIT
    if x.lo == x.hi:
        return _clip(_sin_point(x.lo))
    parts = [_sin_point(x.lo), _sin_point(x.hi)]
    for j in _critical_indices(x, HALF_PI):  # maxima/minima at pi/2 + j*pi
        v = 1.0 if j % 2 == 0 else -1.0
        parts.append(Interval._raw(v, v))
    return _clip(Interval.hull(*parts))


def cos_enclosure(x) -> Interval:
    """Enclosure of ``{cos t : t in x}``."""
    x = as_interval(x)
    if x.lo == -inf or x.hi == inf or x.width >= TWO_PI.lo:
        return UNIT
    if x.lo == x.hi:
        return _clip(_cos_point(x.lo))
    parts = [_cos_point(x.lo), _cos_point(x.hi)]
    for j in _critical_indices(x, None):  # extrema at j*pi
        v = 1.0 if j % 2 == 0 else -1.0
        parts.append(Interval._raw(v, v))
    return _clip(Interval.hull(*parts))


def arccos_enclosure(a, width: float = 1e-12) -> Interval:
    """Enclosure of ``arccos(a)`` for an exact rational ``a`` in [-1, 1].

    Bisection on ``cos_enclosure`` over ``[0, pi]``, where cos is decreasing:
    ``cos(L) >= a`` certifies ``L <= arccos(a)`` and ``cos(H) <= a`` certifies
    ``H >= arccos(a)``.
    """
    a = Fraction(a)
    if a > 1 or a < -1:
        raise DomainError(f"arccos argument {a} outside [-1, 1]")
    # near a = +-1 arccos is too ill-conditioned for bisection on cos
    if a == 1:
        return ZERO
    if a == -1:
        return PI
    if a == 0:
        return HALF_PI
    lo, hi = 0.0, PI.hi
    while hi - lo > width:
        m = 0.5 * (lo + hi)
        if m <= lo or m >= hi:
            break
        c = _cos_point(m)
        if c.lo > a:
            lo = m
        elif c.hi < a:
            hi = m
        else:
            break
    return Interval._raw(lo, hi)

"""Exact-rational polynomials and their interval evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .interval import ZERO, Interval, UNIT, as_interval

__all__ = [
    "PolyCoeffs",
    "horner_eval",
    "taylor_sin",
    "taylor_cos",
    "trig_minus_poly",
]


@dataclass(frozen=True)
class PolyCoeffs:
    """Polynomial with exact rational coefficients, constant term first.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has ``coefficients == ()``.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def of(cls, *coeffs) -> "PolyCoeffs":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyCoeffs":
        return cls((Fraction(0),) * degree + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def lowest_degree(self) -> int | None:
        for k, c in enumerate(self.coefficients):
            if c != 0:
                return k
        return None

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "PolyCoeffs") -> "PolyCoeffs":
        n = max(len(self.coefficients), len(other.coefficients))
        return PolyCoeffs(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> "PolyCoeffs":
        return PolyCoeffs(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "PolyCoeffs") -> "PolyCoeffs":
        return self + (-other)

    def __mul__(self, other) -> "PolyCoeffs":
        if not isinstance(other, PolyCoeffs):
            s = Fraction(other)
            return PolyCoeffs(tuple(c * s for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return PolyCoeffs(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PolyCoeffs(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyCoeffs":
        out = PolyCoeffs.of(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "PolyCoeffs":
        return PolyCoeffs(tuple(k * c for k, c in enumerate(self.coefficients) if k > 0))

    def compose(self, inner: "PolyCoeffs") -> "PolyCoeffs":
        acc = PolyCoeffs(())
        for c in reversed(self.coefficients):
            acc = acc * inner + PolyCoeffs.of(c)
        return acc

    def shift_down(self, k: int) -> "PolyCoeffs":
        """Divide by ``x**k``; the dropped low coefficients must be zero."""
        if any(c != 0 for c in self.coefficients[:k]):
            raise ValueError(f"polynomial is not divisible by x^{k}")
        return PolyCoeffs(self.coefficients[k:])

    def discriminant(self) -> Fraction:
        if self.degree != 2:
            raise ValueError("discriminant is only defined here for quadratics")
        c, b, a = self.coefficients
        return b * b - 4 * a * c

    @cached_property
    def interval_coefficients(self) -> tuple[Interval, ...]:
        return tuple(Interval.from_fraction(c) for c in self.coefficients)

    def __str__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coefficients) if c != 0]
        return " + ".join(terms) if terms else "0"


def horner_eval(p: PolyCoeffs, x) -> Interval:
    """Enclosure of ``{p(t) : t in x}`` by interval Horner evaluation."""
    x = as_interval(x)
    cs = p.interval_coefficients
    if not cs:
        return ZERO
    acc = cs[-1]
    for c in reversed(cs[:-1]):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def taylor_sin(degree: int) -> PolyCoeffs:
    return PolyCoeffs(tuple(
        Fraction((-1) ** (k // 2), math.factorial(k)) if k % 2 else Fraction(0)
        for k in range(degree + 1)
    ))


@lru_cache(maxsize=None)
def taylor_cos(degree: int) -> PolyCoeffs:
    return PolyCoeffs(tuple(
        Fraction((-1) ** (k // 2), math.factorial(k)) if k % 2 == 0 else Fraction(0)
        for k in range(degree + 1)
    ))


def _taylor_degree(mag: float, floor: int) -> int:
    # smallest N >= floor with mag^(N+1)/(N+1)! below 1e-30
    n = floor
    if mag == 0.0:
        return n
    lm = math.log(mag)
    while (n + 1) * lm - math.lgamma(n + 2) > -69.0:
        n += 1
    return n


@lru_cache(maxsize=512)
def _gap_parts(kind: str, poly: PolyCoeffs, degree: int):
    taylor = taylor_sin(degree) if kind == "sin" else taylor_cos(degree)
    q = taylor - poly
    k = q.lowest_degree()
    if k is None:
        k = degree + 1
        reduced = PolyCoeffs(())
    else:
        reduced = q.shift_down(k)
    rem = Interval.from_fraction(Fraction(1, math.factorial(degree + 1)))
    return k, reduced, rem


def trig_minus_poly(kind: str, poly: PolyCoeffs, y) -> Interval:
    """Enclosure of ``trig(y) - poly(y)`` for ``trig`` in {"sin", "cos"}.

    With ``T`` the Taylor polynomial of degree ``N`` and ``Q = T - poly`` the
    Lagrange form gives ``trig(y) - poly(y) = Q(y) + theta*y^(N+1)/(N+1)!``
    with ``|theta| <= 1``.  Writing ``Q = y^k * R`` this is evaluated as
    ``y^k * (R(y) + theta*y^(N+1-k)/(N+1)!)``, which keeps the sign of the
    gap decidable on intervals touching ``y = 0`` where the gap vanishes.
    """
    if kind not in ("sin", "cos"):
        raise ValueError(kind)
    y = as_interval(y)
    degree = _taylor_degree(y.mag, max(poly.degree + 2, 3))
    k, reduced, rem = _gap_parts(kind, poly, degree)
    tail = (y ** (degree + 1 - k)) * UNIT * rem
    return (y ** k) * (horner_eval(reduced, y) + tail)

"""Plain floating-point global minimisation of f, used as an independent cross-check.

Nothing here is rigorous.  f is even and 2 pi-periodic, so [0, pi] is scanned
on a uniform grid of 40 m points (times a multiplier); the best local grid
minima are refined by bisection on the sign of a centred finite-difference
derivative.  Near x = 0 and x = pi the quotient is evaluated from the odd
Taylor series of numerator and denominator in y = x - k pi (degree 11) after
cancelling the common power of y, which removes the 0/0 there and exposes the
poles.  Points where the quotient is still undefined are skipped and logged.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .model import PairMN, f_at_zero

__all__ = [
    "OracleEstimate",
    "SlopeScanRow",
    "f_values",
    "local_minima",
    "refine_min",
    "global_min_f",
    "check_works",
    "compute_B_mn",
    "scan_slope",
    "F_values",
    "min_F",
    "SERIES_RADIUS",
    "WORKS_SLACK",
    "ARGMIN_RADIUS",
]

log = logging.getLogger(__name__)

SERIES_RADIUS = 0.5  # series form while |y| * max(m, n) < this
SERIES_TERMS = 6  # y, y^3, ..., y^11
GRID_PER_M = 40
TOP_K = 20
MAX_ITER = 80
DEFAULT_TOL = 1e-10
FD_STEP = 1e-7
WORKS_SLACK = 1e-9
ARGMIN_RADIUS = 1e-4


@dataclass(frozen=True)
class OracleEstimate:
    pair: PairMN
    argmin_x: float
    min_value: float
    f_at_zero: Fraction
    works: bool  # min_value >= f(0) - slack
    slack: float
    grid_points: int
    refinement_iterations: int
    skipped: tuple[float, ...] = field(default=())

    @property
    def margin(self) -> float:
        """min_value - f(0); negative when something beats x = 0."""
        return self.min_value - float(self.f_at_zero)

    def as_row(self) -> dict:
        return {
            "m": self.pair.m,
            "n": self.pair.n,
            "argmin": self.argmin_x,
            "min": self.min_value,
            "f0": float(self.f_at_zero),
            "works": self.works,
            "slack": self.slack,
        }


@dataclass(frozen=True)
class SlopeScanRow:
    m: int
    n_max_works: int | None
    slope: float | None
    first_failure_n: int | None = None

    @property
    def first_failure_slope(self) -> float | None:
        return None if self.first_failure_n is None else self.first_failure_n / self.m


# --------------------------------------------------------------------------
# pointwise evaluation


def _odd_coeffs(k: int, a: int, shift: int) -> list[int]:
    """Integer parts of the y^(2j+1) coefficients of a sin(x) - sin(k x) at x = shift*pi + y.

    The true coefficient is the returned integer divided by (2j+1)!.
    """
    s1 = -1 if shift % 2 else 1
    sk = -1 if (k * shift) % 2 else 1
    return [(-1) ** j * (a * s1 - sk * k ** (2 * j + 1)) for j in range(SERIES_TERMS)]


def _series_ratio(m: int, n: int, shift: int, y: np.ndarray) -> np.ndarray:
    num = _odd_coeffs(n, n, shift)
    den = _odd_coeffs(m, m, shift)
    first = min(next((j for j, c in enumerate(num) if c), SERIES_TERMS),
                next((j for j, c in enumerate(den) if c), SERIES_TERMS))
    z = y * y
    top = np.zeros_like(y)
    bot = np.zeros_like(y)
    for j in reversed(range(first, SERIES_TERMS)):
        scale = 1.0 / math.factorial(2 * j + 1)
        top = top * z + num[j] * scale
        bot = bot * z + den[j] * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        out = top / bot
    out[~np.isfinite(out)] = np.nan
    return out


def f_values(m: int, n: int, x) -> np.ndarray:
    """f at the points x (array), nan where undefined (a pole hit exactly)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    k = max(m, n)
    shift = np.rint(x / math.pi)
    y = x - shift * math.pi
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (n * np.sin(x) - np.sin(n * x)) / (m * np.sin(x) - np.sin(m * x))
    near = np.abs(y) * k < SERIES_RADIUS
    for s in np.unique(shift[near]):
        sel = near & (shift == s)
        out[sel] = _series_ratio(m, n, int(s), y[sel])
    out[~np.isfinite(out)] = np.nan
    return out


# --------------------------------------------------------------------------
# minimisation


def local_minima(v: np.ndarray) -> np.ndarray:
    """Indices of grid minima of an even function sampled on [0, pi] (nan counts as +inf)."""
    w = np.where(np.isnan(v), np.inf, v)
    left = np.concatenate(([w[1]], w[:-1]))  # mirror at 0
    right = np.concatenate((w[1:], [w[-2]]))  # mirror at pi
    idx = np.nonzero((w <= left) & (w <= right) & np.isfinite(w))[0]
    return idx


def refine_min(fn, lo: float, hi: float, tol: float = DEFAULT_TOL,
               max_iter: int = MAX_ITER, h: float = FD_STEP) -> tuple[float, float, int]:
    """Bisection on the sign of the centred difference (f(x+h) - f(x-h)) / 2h.

    Returns (x, f(x), iterations).  The bracket is assumed to hold one local
    minimum; the best of the visited points is returned.
    """

    def slope(x):
        a, b = fn(np.array([x - h, x + h]))
        return (b - a) / (2 * h)

    best_x, best_v = lo, float(fn(np.array([lo]))[0])
    it = 0
    while it < max_iter and hi - lo > tol:
        it += 1
        mid = 0.5 * (lo + hi)
        if slope(mid) > 0:
            hi = mid
        else:
            lo = mid
    for x in (lo, hi, 0.5 * (lo + hi)):
        v = float(fn(np.array([x]))[0])
        if v < best_v or (v == best_v and x < best_x) or math.isnan(best_v):
            best_x, best_v = x, v
    return best_x, best_v, it


def global_min_f(pair: PairMN, grid_multiplier: float = 1.0, tol: float = DEFAULT_TOL,
                 top_k: int = TOP_K) -> OracleEstimate:
    if grid_multiplier < 1:
        raise ValueError("grid multiplier must be >= 1")
    if not 0 < tol <= 1e-6:
        raise ValueError("tol must lie in (0, 1e-6]")
    m, n = pair.m, pair.n
    points = int(math.ceil(GRID_PER_M * m * grid_multiplier)) + 1
    xs = np.linspace(0.0, math.pi, points)
    vs = f_values(m, n, xs)
    skipped = tuple(float(x) for x in xs[np.isnan(vs)])
    for x in skipped:
        log.info("oracle %s: skipped undefined point x=%r", pair, x)

    idx = local_minima(vs)
    order = sorted(idx, key=lambda i: (vs[i], xs[i]))[:top_k]
    fn = lambda x: f_values(m, n, x)  # noqa: E731
    # (value, x) candidates, including the two symmetry points
    cands = [(float(v), float(x)) for x, v in zip((0.0, math.pi), f_values(m, n, [0.0, math.pi]))
             if not math.isnan(v)]
    iters = 0
    for i in order:
        lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, points - 1)]
        x, v, it = refine_min(fn, float(lo), float(hi), tol)
        iters += it
        if not math.isnan(v):
            cands.append((v, x))
    best_v, best_x = min(cands)
    best_v += 0.0  # no negative zero in reports
    f0 = f_at_zero(pair)
    return OracleEstimate(pair, best_x, best_v, f0, best_v >= float(f0) - WORKS_SLACK,
                          WORKS_SLACK, points, iters, skipped)


def check_works(pair: PairMN, grid_multiplier: float = 1.0,
                tol: float = DEFAULT_TOL) -> tuple[bool, float, OracleEstimate]:
    """Condition (min at 0) as (verdict, margin = min - f(0), estimate)."""
    est = global_min_f(pair, grid_multiplier, tol)
    ok = est.works and abs(est.argmin_x) <= ARGMIN_RADIUS
    return ok, est.margin, est


def compute_B_mn(pair: PairMN, grid_multiplier: float = 1.0, tol: float = DEFAULT_TOL) -> float:
    return global_min_f(pair, grid_multiplier, tol).min_value


def _scan_one(m: int, grid_multiplier: float, tol: float) -> SlopeScanRow:
    evens = list(range(2, m, 2))

    def works(i):
        return check_works(PairMN(m, evens[i]), grid_multiplier, tol)[0]

    # boundary between works / fails, assuming a single switch along increasing n
    if not works(0):
        return SlopeScanRow(m, None, None, evens[0])
    lo, hi = 0, len(evens)  # works(lo) true; hi is the first failing index or len
    if works(len(evens) - 1):
        lo = len(evens) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if works(mid):
            lo = mid
        else:
            hi = mid
    n_max = evens[lo]
    first_fail = evens[hi] if hi < len(evens) else None
    return SlopeScanRow(m, n_max, n_max / m, first_fail)


def scan_slope(m_from: int, m_to: int, grid_multiplier: float = 1.0, tol: float = DEFAULT_TOL,
               threads: int = 1) -> list[SlopeScanRow]:
    if m_from % 2 == 0 or m_to % 2 == 0:
        raise ValueError("m_from and m_to must be odd")
    if m_from < 3 or m_from > m_to:
        raise ValueError("need 3 <= m_from <= m_to")
    ms = list(range(m_from, m_to + 1, 2))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            rows = list(ex.map(lambda m: _scan_one(m, grid_multiplier, tol), ms))
    else:
        rows = [_scan_one(m, grid_multiplier, tol) for m in ms]
    return sorted(rows, key=lambda r: r.m)


# --------------------------------------------------------------------------
# the reduced two-variable function near pi, in floating point


def F_values(lam: float, t, m: int = 81) -> np.ndarray:
    """lam s(t) + s(lam t) + lam (1 - lam^2) m^2/(m^2 - 1) P(t), s the quartic about 3pi/2."""
    t = np.asarray(t, dtype=float)
    c = 1.5 * math.pi

    def s(x):
        a2 = (x - c) ** 2
        return -1 + a2 / 2 - a2 * a2 / 24

    big_p = t - t ** 3 / (6 * m * m) + 1 - (t - c) ** 2 / 2
    return lam * s(t) + s(lam * t) + lam * (1 - lam * lam) * m * m / (m * m - 1) * big_p


def min_F(lam: float = 0.8194, m: int = 81, t_lo: float = 2.8, t_hi: float = 5.78,
          points: int = 20001, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """(argmin t, min value) of F(lam, ., m) on [t_lo, t_hi] by grid plus refinement."""
    ts = np.linspace(t_lo, t_hi, points)
    vs = F_values(lam, ts, m)
    i = int(np.argmin(vs))
    lo, hi = ts[max(i - 1, 0)], ts[min(i + 1, points - 1)]
    x, v, _ = refine_min(lambda t: F_values(lam, t, m), float(lo), float(hi), tol)
    if vs[i] < v:
        x, v = float(ts[i]), float(vs[i])
    return x, v

"""Interval-arithmetic verification that min f = f(0) for f(x) = (n sin x - sin nx)/(m sin x - sin mx)."""

from .interval import Interval
from .model import PairMN, ScopeError, f_at_zero, g_at_zero

__version__ = "0.1.0"

__all__ = ["Interval", "PairMN", "ScopeError", "f_at_zero", "g_at_zero", "__version__"]

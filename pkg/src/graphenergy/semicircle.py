"""The semicircle law with scale ``sigma`` and its comparison with spectra.

Density ``phi(x) = sqrt(4 sigma^2 - x^2) / (2 pi sigma^2)`` on
``[-2 sigma, 2 sigma]``.  With ``t = x / (2 sigma)`` the CDF is

    Phi(x) = 1/2 + (t sqrt(1 - t^2) + arcsin t) / pi,

and the even moments are Catalan numbers times ``sigma^(2k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .spectral import Spectrum

__all__ = ["SemicircleLaw", "catalan", "ks_distance", "MAX_EVEN_MOMENT"]

MAX_EVEN_MOMENT = 10


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class SemicircleLaw:
    sigma: float

    def __post_init__(self):
        if not self.sigma >= 0 or not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be nonnegative and finite, got {self.sigma}")

    def _require_positive(self):
        if self.sigma <= 0:
            raise ValueError("the semicircle density and CDF need sigma > 0")

    @classmethod
    def from_p(cls, p: float) -> "SemicircleLaw":
        """Law of ``n^{-1/2}(A - p(J - I))`` for ``G(n, p)``: ``sigma = sqrt(p(1-p))``."""
        if not 0.0 < p < 1.0:
            raise ValueError(f"p must lie in (0, 1), got {p}")
        return cls(math.sqrt(p * (1.0 - p)))

    @property
    def support(self) -> tuple[float, float]:
        return (-2.0 * self.sigma, 2.0 * self.sigma)

    def density(self, x):
        self._require_positive()
        s2 = self.sigma * self.sigma
        x = np.asarray(x, dtype=float)
        inside = np.clip(4.0 * s2 - x * x, 0.0, None)
        out = np.sqrt(inside) / (2.0 * math.pi * s2)
        return float(out) if out.ndim == 0 else out

    def cdf(self, x):
        self._require_positive()
        t = np.clip(np.asarray(x, dtype=float) / (2.0 * self.sigma), -1.0, 1.0)
        out = 0.5 + (t * np.sqrt(1.0 - t * t) + np.arcsin(t)) / math.pi
        out = np.clip(out, 0.0, 1.0)
        return float(out) if out.ndim == 0 else out

    def ppf(self, q: float) -> float:
        """Quantile function (root of ``cdf(x) = q`` on the support)."""
        if not 0.0 <= q <= 1.0:
            raise ValueError("q must lie in [0, 1]")
        lo, hi = self.support
        if q == 0.0:
            return lo
        if q == 1.0:
            return hi
        return brentq(lambda x: self.cdf(x) - q, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    def abs_first_moment(self) -> float:
        """``integral |x| dPhi = 8 sigma / (3 pi)``."""
        return 8.0 * self.sigma / (3.0 * math.pi)

    def even_moment(self, k: int) -> float:
        """``integral x^(2k) dPhi = Catalan(k) sigma^(2k)``, ``0 <= k <= 10``."""
        if not 0 <= k <= MAX_EVEN_MOMENT:
            raise ValueError(f"k must be in [0, {MAX_EVEN_MOMENT}], got {k}")
        return catalan(k) * self.sigma ** (2 * k)

    def moment(self, j: int) -> float:
        """Raw moment of order ``j``; odd orders vanish by symmetry."""
        if j % 2:
            return 0.0
        return self.even_moment(j // 2)


def ks_distance(s: Spectrum, scale: float, law: SemicircleLaw) -> float:
    """Kolmogorov-Smirnov distance between the ESD of ``scale * s`` and ``law``.

    Evaluated at every jump of the ESD from both sides, which attains the
    supremum because the law's CDF is continuous and monotone.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    law._require_positive()
    if s.n == 0:
        raise ValueError("empty spectrum")
    ev = scale * s.eigenvalues
    pts = np.unique(ev)
    below = np.searchsorted(ev, pts, side="left") / s.n
    upto = np.searchsorted(ev, pts, side="right") / s.n
    phi = law.cdf(pts)
    return float(max(np.max(np.abs(upto - phi)), np.max(np.abs(phi - below))))

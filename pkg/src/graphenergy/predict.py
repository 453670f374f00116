"""Asymptotic energy predictions for degree-weighted G(n, p).

Two sources are offered for every catalog weight:

``theorem3_general``
    ``f(np, np) * (8 / 3 pi) sqrt(p (1 - p)) * n^(3/2)`` with the exact
    finite-n center value.
``corollary_closed_form``
    The same law with ``f(np, np)`` replaced by its leading asymptotic form,
    so that the result is a monomial in ``n`` (times ``ln n`` for the
    multiplicative Zagreb weights).

For ``sci`` the closed form carries the constant ``4 sqrt(2) / (3 pi)``
that follows from the general law.  The smaller ``2 sqrt(2) / (3 pi)``,
also in circulation, is kept in :attr:`Prediction.paper_displayed` for
comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .semicircle import SemicircleLaw
from .weights import WeightDomainError, WeightSpec, center_value

__all__ = [
    "GENERAL",
    "CLOSED_FORM",
    "Prediction",
    "ArgmaxResult",
    "has_closed_form",
    "predict_energy",
    "argmax_p",
    "stationary_p",
]

GENERAL = "theorem3_general"
CLOSED_FORM = "corollary_closed_form"

_K = 8.0 / (3.0 * math.pi)
SCI_DISPLAYED_CONSTANT = 2.0 * math.sqrt(2.0) / (3.0 * math.pi)


@dataclass(frozen=True)
class Prediction:
    index_id: str
    alpha: float | None
    n: int
    p: float
    predicted_energy: float
    leading_exponent: float
    source: str
    paper_displayed: float | None = None


def _closed_forms(alpha: float | None) -> dict[str, Callable[[float, float], float]]:
    def s(p):
        return math.sqrt(p * (1.0 - p))

    def r(p):
        return math.sqrt((1.0 - p) / p)

    forms = {
        "unit": lambda n, p: _K * s(p) * n**1.5,
        "zagreb_m1": lambda n, p: 2.0 * _K * p * s(p) * n**2.5,
        "zagreb_m2": lambda n, p: _K * p**2 * s(p) * n**3.5,
        "randic": lambda n, p: _K * r(p) * n**0.5,
        "abc": lambda n, p: math.sqrt(2.0) * _K * math.sqrt(1.0 - p) * n,
        "azi": lambda n, p: p**3 * s(p) / (3.0 * math.pi) * n**4.5,
        "ag1": lambda n, p: _K * s(p) * n**1.5,
        "harmonic": lambda n, p: _K * r(p) * n**0.5,
        "sci": lambda n, p: _K / math.sqrt(2.0) * math.sqrt(1.0 - p) * n,
        "mzagreb1": lambda n, p: 2.0 * _K * r(p) * n**0.5 * math.log(n),
        "mzagreb1_star": lambda n, p: _K * s(p) * n**1.5 * math.log(n),
        "mzagreb2": lambda n, p: 2.0 * _K * s(p) * n**1.5 * math.log(n),
        "lanzhou": lambda n, p: 2.0 * _K * (p * (1.0 - p)) ** 1.5 * n**3.5,
    }
    if alpha is not None:
        forms["general_randic"] = lambda n, p: _K * p ** (2 * alpha) * s(p) * n ** (1.5 + 2 * alpha)
    return forms


def has_closed_form(spec: WeightSpec) -> bool:
    return spec.id in _closed_forms(spec.alpha)


def predict_energy(spec: WeightSpec, n: int, p: float, source: str = GENERAL) -> Prediction:
    """Predicted energy of ``A(G_p(f))`` at order ``n``.

    Raises
    ------
    ValueError
        For ``p`` outside ``(0, 1)``, ``n < 2``, an unknown source, or a
        closed form requested for a weight that has none.
    WeightDomainError
        If ``f(np, np)`` is zero or undefined (general source).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    exponent = 1.5 + spec.center_exponent
    if source == GENERAL:
        fc = center_value(spec, n, p)
        value = fc * SemicircleLaw.from_p(p).abs_first_moment() * n**1.5
        return Prediction(spec.id, spec.alpha, n, p, value, exponent, GENERAL)
    if source == CLOSED_FORM:
        forms = _closed_forms(spec.alpha)
        if spec.id not in forms:
            raise ValueError(f"no closed-form prediction for weight {spec.label!r}")
        value = forms[spec.id](float(n), p)
        displayed = None
        if spec.id == "sci":
            displayed = SCI_DISPLAYED_CONSTANT * math.sqrt(1.0 - p) * n
        return Prediction(spec.id, spec.alpha, n, p, value, exponent, CLOSED_FORM, displayed)
    raise ValueError(f"unknown prediction source {source!r}")


def stationary_p(spec: WeightSpec) -> float | None:
    """Maximizing ``p`` of the closed form, where one is known in closed form.

    ``general_randic`` returns ``(4a + 1) / (4a + 2)`` only for
    ``a >= -1/4`` or ``a < -1/2``; for ``a < -1/2`` that value exceeds 1 and
    the predictor is in fact decreasing on ``(0, 1)``.
    """
    fixed = {
        "unit": 0.5, "ag1": 0.5, "mzagreb1_star": 0.5, "mzagreb2": 0.5, "lanzhou": 0.5,
        "zagreb_m1": 0.75, "zagreb_m2": 5.0 / 6.0, "azi": 0.875,
    }
    if spec.id in fixed:
        return fixed[spec.id]
    if spec.id == "general_randic":
        a = spec.alpha
        if a >= -0.25 or a < -0.5:
            return (4 * a + 1) / (4 * a + 2)
    return None


@dataclass(frozen=True)
class ArgmaxResult:
    """Outcome of :func:`argmax_p`.

    ``trend`` is ``"interior"`` when a maximum inside ``(0, 1)`` was found,
    otherwise ``"decreasing"`` or ``"increasing"`` and ``p_star`` is None.
    """

    index_id: str
    alpha: float | None
    p_star: float | None
    trend: str
    method: str = "grid+refine"
    source: str = CLOSED_FORM
    closed_form: float | None = None


def _golden_max(f, lo, hi, tol):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


def argmax_p(spec: WeightSpec, n: int = 10**6, source: str | None = None,
             step: float = 1e-3, tol: float = 1e-7) -> ArgmaxResult:
    """Probability maximizing the predicted energy on ``(0, 1)``.

    A grid of spacing ``step`` locates the best cell; golden-section search
    on the two neighbouring cells refines it to ``tol``.  The closed-form
    source is used by default, because the finite-n center value of the
    logarithmic weights shifts the maximizer by ``O(1 / ln n)``.
    """
    if source is None:
        source = CLOSED_FORM if has_closed_form(spec) else GENERAL

    def objective(p):
        try:
            return predict_energy(spec, n, p, source).predicted_energy
        except WeightDomainError:
            return -math.inf

    grid = np.arange(1, int(round(1.0 / step))) * step
    vals = np.array([objective(float(p)) for p in grid])
    i = int(np.argmax(vals))
    closed = stationary_p(spec)
    if i == 0 or i == len(grid) - 1:
        trend = "decreasing" if i == 0 else "increasing"
        return ArgmaxResult(spec.id, spec.alpha, None, trend, source=source, closed_form=closed)
    p_star = _golden_max(objective, float(grid[i - 1]), float(grid[i + 1]), tol)
    return ArgmaxResult(spec.id, spec.alpha, p_star, "interior", source=source, closed_form=closed)

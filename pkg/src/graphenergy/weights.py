"""Degree-based edge weights and the weighted adjacency matrices they induce.

Every catalog entry is a symmetric function ``f(d_i, d_j)`` of the endpoint
degrees (the Lanzhou weight also reads the graph order ``n``).  The same
vectorized rule is used for integer degrees on edges and for the real-valued
center ``f(np, np)``.

Catalog identifiers
-------------------
``unit``            1
``zagreb_m1``       d_i + d_j
``zagreb_m2``       d_i d_j
``randic``          1 / sqrt(d_i d_j)
``general_randic``  (d_i d_j) ** alpha
``abc``             sqrt(d_i + d_j - 2) / sqrt(d_i d_j)
``azi``             (d_i d_j / (d_i + d_j - 2)) ** 3
``ag1``             2 sqrt(d_i d_j) / (d_i + d_j)
``harmonic``        2 / (d_i + d_j)
``sci``             1 / sqrt(d_i + d_j)
``mzagreb1``        ln(d_i) / d_i + ln(d_j) / d_j
``mzagreb1_star``   ln(d_i + d_j)
``mzagreb2``        ln(d_i) + ln(d_j)
``lanzhou``         (n - 1)(d_i + d_j) - (d_i**2 + d_j**2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .graph import Graph

__all__ = [
    "WeightDomainError",
    "WeightSpec",
    "CATALOG_IDS",
    "ALPHA_RANGE",
    "get_spec",
    "catalog",
    "custom_weight",
    "eval_weight",
    "center_value",
    "build_weighted_adjacency",
    "center_scale",
    "uncenter",
]

ALPHA_RANGE = (-4.0, 4.0)


class WeightDomainError(ValueError):
    """A weight formula is undefined (or a center value vanishes)."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None,
                 degrees: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge
        self.degrees = degrees


WeightFunc = Callable[[np.ndarray, np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class WeightSpec:
    """One entry of the weight catalog.

    Attributes
    ----------
    id : str
        Stable catalog identifier (used on the command line and in CSV).
    func : callable
        Vectorized rule ``(d_i, d_j, n) -> f``; accepts float arrays.
    alpha : float or None
        Exponent of ``general_randic``; ``None`` for every other entry.
    needs_n : bool
        Whether ``func`` reads the graph order.
    center_exponent : float
        Power of ``n`` in the leading growth of ``f(np, np)``.
    log_power : int
        Power of ``ln n`` in that leading growth (1 for the multiplicative
        Zagreb family).
    growth : (C, m)
        Constants with ``|f(d, d)|, 1/|f(d, d)| <= C n**m`` for integer
        ``2 <= d <= n - 2``.
    """

    id: str
    func: WeightFunc = field(repr=False, compare=False)
    alpha: float | None = None
    needs_n: bool = False
    center_exponent: float = 0.0
    log_power: int = 0
    growth: tuple[float, float] = (1.0, 1.0)

    @property
    def label(self) -> str:
        if self.alpha is None:
            return self.id
        return f"{self.id}:{self.alpha:g}"

    def __call__(self, di, dj, n=0):
        with np.errstate(all="ignore"):
            return self.func(np.asarray(di, dtype=float), np.asarray(dj, dtype=float), float(n))


def _unit(x, y, n):
    return np.ones(np.broadcast(x, y).shape)


def _zagreb_m1(x, y, n):
    return x + y


def _zagreb_m2(x, y, n):
    return x * y


def _randic(x, y, n):
    return 1.0 / np.sqrt(x * y)


def _abc(x, y, n):
    return np.sqrt(x + y - 2.0) / np.sqrt(x * y)


def _azi(x, y, n):
    return (x * y / (x + y - 2.0)) ** 3


def _ag1(x, y, n):
    return 2.0 * np.sqrt(x * y) / (x + y)


def _harmonic(x, y, n):
    return 2.0 / (x + y)


def _sci(x, y, n):
    return 1.0 / np.sqrt(x + y)


def _mzagreb1(x, y, n):
    # ln(1)/1 = 0, so degree-1 endpoints are fine; degree 0 gives nan
    return np.log(x) / x + np.log(y) / y


def _mzagreb1_star(x, y, n):
    return np.log(x + y)


def _mzagreb2(x, y, n):
    return np.log(x) + np.log(y)


def _lanzhou(x, y, n):
    return (n - 1.0) * (x + y) - (x * x + y * y)


_CATALOG: dict[str, WeightSpec] = {
    s.id: s
    for s in (
        WeightSpec("unit", _unit, center_exponent=0.0, growth=(1.0, 1.0)),
        WeightSpec("zagreb_m1", _zagreb_m1, center_exponent=1.0, growth=(2.0, 1.0)),
        WeightSpec("zagreb_m2", _zagreb_m2, center_exponent=2.0, growth=(1.0, 2.0)),
        WeightSpec("randic", _randic, center_exponent=-1.0, growth=(1.0, 1.0)),
        WeightSpec("abc", _abc, center_exponent=-0.5, growth=(1.0, 1.0)),
        WeightSpec("azi", _azi, center_exponent=3.0, growth=(1.0, 3.0)),
        WeightSpec("ag1", _ag1, center_exponent=0.0, growth=(1.0, 1.0)),
        WeightSpec("harmonic", _harmonic, center_exponent=-1.0, growth=(1.0, 1.0)),
        WeightSpec("sci", _sci, center_exponent=-0.5, growth=(math.sqrt(2.0), 1.0)),
        WeightSpec("mzagreb1", _mzagreb1, center_exponent=-1.0, log_power=1, growth=(1.0, 1.0)),
        WeightSpec("mzagreb1_star", _mzagreb1_star, log_power=1, growth=(2.0, 1.0)),
        WeightSpec("mzagreb2", _mzagreb2, log_power=1, growth=(2.0, 1.0)),
        WeightSpec("lanzhou", _lanzhou, needs_n=True, center_exponent=2.0, growth=(2.0, 2.0)),
    )
}

CATALOG_IDS: tuple[str, ...] = (
    "unit", "zagreb_m1", "zagreb_m2", "randic", "general_randic", "abc", "azi",
    "ag1", "harmonic", "sci", "mzagreb1", "mzagreb1_star", "mzagreb2", "lanzhou",
)


def _general_randic(alpha: float) -> WeightSpec:
    alpha = float(alpha)
    lo, hi = ALPHA_RANGE
    if not math.isfinite(alpha) or not lo <= alpha <= hi:
        raise ValueError(f"general_randic alpha must be finite and in [{lo}, {hi}], got {alpha}")

    def f(x, y, n):
        return (x * y) ** alpha

    return WeightSpec(
        "general_randic", f, alpha=alpha,
        center_exponent=2.0 * alpha, growth=(1.0, max(2.0 * abs(alpha), 1.0)),
    )


def get_spec(index: str, alpha: float | None = None) -> WeightSpec:
    """Look up a catalog entry.

    ``general_randic`` needs ``alpha``, given either as the keyword or in the
    ``"general_randic:0.5"`` form.
    """
    name, _, suffix = index.partition(":")
    if suffix:
        try:
            alpha = float(suffix)
        except ValueError:
            raise ValueError(f"bad alpha suffix in index {index!r}") from None
    if name == "general_randic":
        if alpha is None:
            raise ValueError("general_randic requires alpha")
        return _general_randic(alpha)
    if name not in _CATALOG:
        raise ValueError(f"unknown weight index {name!r}; choose from {', '.join(CATALOG_IDS)}")
    if suffix:
        raise ValueError(f"index {name!r} takes no alpha parameter")
    return _CATALOG[name]


def catalog(alpha: float = 0.5) -> list[WeightSpec]:
    """All catalog entries, with ``general_randic`` at the given ``alpha``."""
    return [get_spec(i, alpha if i == "general_randic" else None) for i in CATALOG_IDS]


def custom_weight(name: str, func: WeightFunc, *, needs_n: bool = False,
                  center_exponent: float = 0.0) -> WeightSpec:
    """Wrap a user-supplied vectorized ``func(d_i, d_j, n)``.

    Custom weights have no closed-form corollary; only the general
    predictor applies.
    """
    if name in CATALOG_IDS:
        raise ValueError(f"{name!r} collides with a catalog identifier")
    return WeightSpec(name, func, needs_n=needs_n, center_exponent=center_exponent)


def eval_weight(spec: WeightSpec, d_i: int, d_j: int, n: int = 0) -> float:
    """Value of ``f(d_i, d_j)`` for one edge.

    Raises
    ------
    WeightDomainError
        If the formula is undefined at these degrees (e.g. ``azi`` with
        ``d_i + d_j = 2``).
    """
    if d_i < 0 or d_j < 0:
        raise ValueError(f"degrees must be nonnegative, got ({d_i}, {d_j})")
    val = float(spec(d_i, d_j, n))
    if not math.isfinite(val):
        raise WeightDomainError(
            f"{spec.label} is undefined at degrees ({d_i}, {d_j})", degrees=(int(d_i), int(d_j))
        )
    return val


def center_value(spec: WeightSpec, n: int, p: float) -> float:
    """``f(np, np)`` evaluated at real arguments.

    For ``lanzhou`` this is ``2(n-1)np - 2(np)**2``, whose leading form is
    ``2 n**2 p (1-p)``.
    """
    x = n * p
    val = float(spec(x, x, n))
    if not math.isfinite(val) or val == 0.0:
        raise WeightDomainError(f"center value f(np, np) of {spec.label} is {val} at n={n}, p={p}")
    return val


def build_weighted_adjacency(g: Graph, spec: WeightSpec) -> np.ndarray:
    """Dense symmetric ``A(f)`` with ``A[i, j] = f(d_i, d_j)`` on edges."""
    a = np.zeros((g.n, g.n))
    if g.num_edges == 0:
        return a
    i, j = g.edges[:, 0], g.edges[:, 1]
    di, dj = g.degrees[i], g.degrees[j]
    w = np.asarray(spec(di, dj, g.n), dtype=float)
    bad = ~np.isfinite(w)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        edge = (int(i[k]), int(j[k]))
        degs = (int(di[k]), int(dj[k]))
        raise WeightDomainError(
            f"{spec.label} is undefined on edge {edge} with degrees {degs}", edge=edge, degrees=degs
        )
    a[i, j] = w
    a[j, i] = w
    return a


def center_scale(a: np.ndarray, fc: float, p: float) -> np.ndarray:
    """``A / fc - p (J - I)``: off-diagonal entries shifted by ``-p``, diagonal zero."""
    if fc == 0.0:
        raise ValueError("center value fc must be nonzero")
    out = a / fc - p
    np.fill_diagonal(out, 0.0)
    return out


def uncenter(at: np.ndarray, fc: float, p: float) -> np.ndarray:
    """Inverse of :func:`center_scale` for zero-diagonal ``A``."""
    out = fc * (at + p)
    np.fill_diagonal(out, 0.0)
    return out

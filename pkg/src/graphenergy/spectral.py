"""Dense symmetric eigenvalues and the quantities derived from a spectrum.

The default solver reduces the matrix to tridiagonal form with blocked
Householder reflections (panel updates go through matrix products) and then
runs implicit-shift QL on the tridiagonal.  Only eigenvalues are formed.
``method="lapack"`` routes through :func:`numpy.linalg.eigvalsh` instead and
is kept as a cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph
from .weights import WeightSpec, eval_weight

__all__ = [
    "NonConvergenceError",
    "Spectrum",
    "KyFanResult",
    "MAX_QL_ITERATIONS",
    "MAX_MOMENT_ORDER",
    "tridiagonalize",
    "tridiagonal_eigenvalues",
    "eigenvalues_symmetric",
    "energy",
    "esd",
    "esd_distance",
    "trace_moment",
    "walk_moment",
    "ky_fan_check",
]

MAX_QL_ITERATIONS = 50
MAX_MOMENT_ORDER = 12
SYMMETRY_TOL = 1e-12
_PANEL = 32


class NonConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of an order-``n`` symmetric matrix, sorted ascending."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        ev = np.sort(np.asarray(self.eigenvalues, dtype=float))
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)

    @property
    def n(self) -> int:
        return int(self.eigenvalues.shape[0])

    def energy(self) -> float:
        return energy(self)

    def moment(self, k: int, scale: float = 1.0) -> float:
        """``(1/n) sum (scale * lambda_i) ** k``."""
        return float(np.mean((scale * self.eigenvalues) ** k))

    def scaled(self, c: float) -> "Spectrum":
        return Spectrum(c * self.eigenvalues)

    def __len__(self):
        return self.n


def tridiagonalize(a: np.ndarray, block: int = _PANEL) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonally reduce symmetric ``a`` to tridiagonal form.

    Returns the diagonal ``d`` (length n) and subdiagonal ``e`` (length n-1)
    of ``Q^T a Q``.  ``a`` is not modified.

    Works panel by panel: within a panel of ``block`` columns each reflector
    is formed from the column corrected for the pending rank-2 updates
    ``V W^T + W V^T``; the trailing matrix is updated once per panel.
    """
    a = np.array(a, dtype=float, order="C")
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(max(n - 1, 0))
    k0 = 0
    while k0 < n - 2:
        b = min(block, n - 2 - k0)
        m = n - k0
        V = np.zeros((m, b))
        W = np.zeros((m, b))
        for j in range(b):
            c = k0 + j
            r = c - k0
            if j:
                a[c:, c] -= V[r:, :j] @ W[r, :j] + W[r:, :j] @ V[r, :j]
            d[c] = a[c, c]
            x = a[c + 1:, c]
            alpha = math.sqrt(float(x @ x))
            if alpha == 0.0:
                continue
            # reflect x onto -sign(x0)|x| e1 to avoid cancellation in v0
            if x[0] > 0.0:
                alpha = -alpha
            v = x.copy()
            v[0] -= alpha
            tau = 2.0 / float(v @ v)
            p = a[c + 1:, c + 1:] @ v
            if j:
                Vs, Ws = V[r + 1:, :j], W[r + 1:, :j]
                p -= Vs @ (Ws.T @ v) + Ws @ (Vs.T @ v)
            p *= tau
            w = p - (0.5 * tau * float(p @ v)) * v
            V[r + 1:, j] = v
            W[r + 1:, j] = w
            e[c] = alpha
        trail = a[k0 + b:, k0 + b:]
        trail -= V[b:] @ W[b:].T
        trail -= W[b:] @ V[b:].T
        k0 += b
    if n >= 2:
        d[n - 2] = a[n - 2, n - 2]
        e[n - 2] = a[n - 1, n - 2]
    d[n - 1] = a[n - 1, n - 1]
    return d, e


@numba.njit(cache=True)
def _tql(d, e, maxit):
    # implicit-shift QL (values only); returns (eigenvalues, converged)
    n = d.shape[0]
    d = d.copy()
    sub = np.zeros(n)
    sub[: n - 1] = e
    eps = np.finfo(np.float64).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(sub[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > maxit:
                return d, False
            g = (d[l + 1] - d[l]) / (2.0 * sub[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + sub[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * sub[i]
                b = c * sub[i]
                r = math.hypot(f, g)
                sub[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    sub[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            sub[l] = g
            sub[m] = 0.0
    return d, True


def tridiagonal_eigenvalues(d: np.ndarray, e: np.ndarray,
                            max_iter: int = MAX_QL_ITERATIONS) -> np.ndarray:
    """Eigenvalues of the symmetric tridiagonal matrix ``(d, e)``, ascending."""
    d = np.ascontiguousarray(d, dtype=float)
    e = np.ascontiguousarray(e, dtype=float)
    if e.shape[0] != max(d.shape[0] - 1, 0):
        raise ValueError("subdiagonal must have length n - 1")
    vals, ok = _tql(d, e, max_iter)
    if not ok:
        raise NonConvergenceError(f"QL iteration did not converge within {max_iter} sweeps")
    return np.sort(vals)


def _check_symmetric(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    asym = float(np.max(np.abs(a - a.T)))
    if asym > SYMMETRY_TOL:
        raise ValueError(f"matrix is not symmetric (max |a_ij - a_ji| = {asym:.3g})")
    return a


def eigenvalues_symmetric(a: np.ndarray, method: str = "householder") -> Spectrum:
    """All eigenvalues of a real symmetric matrix.

    Parameters
    ----------
    a : (n, n) array_like
        Must be symmetric to 1e-12 absolute.
    method : {"householder", "lapack"}
        Built-in Householder + QL, or LAPACK via numpy.

    Raises
    ------
    ValueError
        For non-square, non-finite or asymmetric input.
    NonConvergenceError
        If a QL eigenvalue needs more than ``MAX_QL_ITERATIONS`` sweeps.
    """
    a = _check_symmetric(a)
    if method == "householder":
        d, e = tridiagonalize(a)
        return Spectrum(tridiagonal_eigenvalues(d, e))
    if method == "lapack":
        return Spectrum(np.linalg.eigvalsh(a))
    raise ValueError(f"unknown eigensolver method {method!r}")


def energy(s: Spectrum) -> float:
    """Sum of absolute eigenvalues."""
    return float(np.sum(np.abs(s.eigenvalues)))


def esd(s: Spectrum, x, scale: float = 1.0):
    """Empirical spectral distribution of ``scale * s`` at ``x``.

    Right-continuous: the fraction of eigenvalues with ``scale*lambda <= x``.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    ev = scale * s.eigenvalues
    out = np.searchsorted(ev, x, side="right") / s.n
    return float(out) if np.ndim(out) == 0 else out


def esd_distance(s1: Spectrum, s2: Spectrum) -> float:
    """Sup-norm distance between two ESDs of equal order."""
    if s1.n != s2.n:
        raise ValueError("spectra must have the same order")
    # both step functions are constant between consecutive jump points
    pts = np.union1d(s1.eigenvalues, s2.eigenvalues)
    f1 = np.searchsorted(s1.eigenvalues, pts, side="right")
    f2 = np.searchsorted(s2.eigenvalues, pts, side="right")
    return float(np.max(np.abs(f1 - f2))) / s1.n


def trace_moment(a, k: int, method: str = "householder") -> float:
    """``(1/n) Tr(a**k)``, computed as ``(1/n) sum lambda_i**k``.

    ``a`` may be a matrix or an already computed :class:`Spectrum`.
    """
    if not 0 <= k <= MAX_MOMENT_ORDER:
        raise ValueError(f"moment order must be in [0, {MAX_MOMENT_ORDER}], got {k}")
    s = a if isinstance(a, Spectrum) else eigenvalues_symmetric(a, method)
    return s.moment(k)


WALK_MAX_N = 8
WALK_MAX_K = 6


def walk_moment(g: Graph, spec: WeightSpec, fc: float, p: float, k: int) -> float:
    """Closed-walk expansion of ``(1/n) Tr(At**k)`` for ``At = A/fc - p(J - I)``.

    Brute force over all ``n**k`` vertex sequences ``i_1 .. i_k`` with the
    wraparound product ``At[i_1,i_2] ... At[i_k,i_1]``.  Entries come from
    the edge set and :func:`eval_weight` directly, never from a matrix
    product.  Limited to ``n <= 8`` and ``k <= 6``.
    """
    n = g.n
    if n > WALK_MAX_N or not 1 <= k <= WALK_MAX_K:
        raise ValueError(f"walk enumeration limited to n <= {WALK_MAX_N}, 1 <= k <= {WALK_MAX_K}")
    if fc == 0.0:
        raise ValueError("center value fc must be nonzero")
    edges = g.edge_set()
    deg = [int(x) for x in g.degrees]
    entry = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if (min(i, j), max(i, j)) in edges:
                entry[i][j] = eval_weight(spec, deg[i], deg[j], n) / fc - p
            else:
                entry[i][j] = -p
    total = 0.0
    for walk in itertools.product(range(n), repeat=k):
        prod = 1.0
        for t in range(k):
            prod *= entry[walk[t]][walk[(t + 1) % k]]
            if prod == 0.0:
                break
        total += prod
    return total / n


@dataclass(frozen=True)
class KyFanResult:
    lhs: float
    rhs: float
    holds: bool


def ky_fan_check(x: np.ndarray, y: np.ndarray, method: str = "householder") -> KyFanResult:
    """Compare ``E(X + Y)`` with ``E(X) + E(Y)``; holds up to 1e-8 relative."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"order mismatch: {x.shape} vs {y.shape}")
    lhs = energy(eigenvalues_symmetric(x + y, method))
    rhs = energy(eigenvalues_symmetric(x, method)) + energy(eigenvalues_symmetric(y, method))
    return KyFanResult(lhs, rhs, lhs <= rhs + 1e-8 * rhs)

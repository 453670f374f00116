"""Simple undirected graphs and seeded Erdos-Renyi sampling.

Graphs are stored as an ``(m, 2)`` integer array of edges with ``i < j``
(0-indexed), sorted lexicographically, plus a cached degree vector.  At
``n = 4000`` and ``p = 1/2`` a graph has about four million edges, which is
why a Python set of tuples is not used as the backing store.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

__all__ = [
    "Graph",
    "Seed",
    "sample_gnp",
    "degrees",
    "make_named",
    "read_edgelist",
    "write_edgelist",
]

_U64 = 2**64


@dataclass(frozen=True)
class Seed:
    """Per-trial seed: a 64-bit master seed and a trial counter.

    The derived stream is the ``trial_index``-th spawned child of the master
    ``SeedSequence``, so distinct trials never share generator state.
    """

    master: int
    trial_index: int = 0

    def __post_init__(self):
        if not 0 <= int(self.master) < _U64:
            raise ValueError(f"master seed must be a 64-bit unsigned integer, got {self.master}")
        if int(self.trial_index) < 0:
            raise ValueError(f"trial_index must be nonnegative, got {self.trial_index}")

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=int(self.master), spawn_key=(int(self.trial_index),))
        return np.random.Generator(np.random.PCG64(ss))


def _normalize_edges(n: int, edges) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"edges must have shape (m, 2), got {arr.shape}")
    if np.any(arr[:, 0] == arr[:, 1]):
        i = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
        raise ValueError(f"self-loop ({i}, {i}) is not allowed in a simple graph")
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"edge endpoint out of range [0, {n})")
    arr = np.sort(arr, axis=1)
    return np.unique(arr, axis=0)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of pairs; it is normalized to a
    read-only, duplicate-free ``(m, 2)`` array with ``i < j``.
    """

    n: int
    edges: np.ndarray
    degrees: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        e = _normalize_edges(self.n, self.edges)
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)
        deg = np.bincount(e.ravel(), minlength=self.n).astype(np.int64)
        deg.setflags(write=False)
        object.__setattr__(self, "degrees", deg)

    @classmethod
    def _from_sorted(cls, n: int, edges: np.ndarray) -> "Graph":
        # trusted fast path for sample_gnp: edges already unique, i < j, sorted
        g = object.__new__(cls)
        edges.setflags(write=False)
        deg = np.bincount(edges.ravel(), minlength=n).astype(np.int64)
        deg.setflags(write=False)
        object.__setattr__(g, "n", int(n))
        object.__setattr__(g, "edges", edges)
        object.__setattr__(g, "degrees", deg)
        return g

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((int(i), int(j)) for i, j in self.edges)

    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix as float64."""
        a = np.zeros((self.n, self.n))
        i, j = self.edges[:, 0], self.edges[:, 1]
        a[i, j] = 1.0
        a[j, i] = 1.0
        return a

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def sample_gnp(n: int, p: float, seed: Seed | int) -> Graph:
    """Sample ``G(n, p)``: every unordered pair is an edge independently w.p. ``p``.

    One uniform draw is made per pair, in row-major upper-triangle order, so
    the edge set is a pure function of ``(n, p, seed)``.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in the open interval (0, 1), got {p!r}")
    if not isinstance(seed, Seed):
        seed = Seed(int(seed))
    rng = seed.generator()
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.shape[0]) < p
    edges = np.column_stack((iu[keep], ju[keep])).astype(np.int64)
    return Graph._from_sorted(n, edges)


def degrees(g: Graph) -> np.ndarray:
    return g.degrees


def make_named(kind: str, n: int) -> Graph:
    """Deterministic fixture graphs: ``complete``, ``path``, ``cycle``, ``empty``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if kind == "complete":
        iu, ju = np.triu_indices(n, k=1)
        edges = np.column_stack((iu, ju))
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        if n < 3:
            raise ValueError(f"cycle requires n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif kind == "empty":
        edges = []
    else:
        raise ValueError(f"unknown graph kind {kind!r}; expected complete, path, cycle or empty")
    return Graph(n, edges)


def write_edgelist(g: Graph, dest: str | os.PathLike | TextIO) -> None:
    """Write ``"n m"`` then one ``"i j"`` line per edge (``i < j``)."""
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    text = "\n".join(lines) + "\n"
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        dest.write(text)


def _parse_ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ValueError(f"line {lineno}: expected {count} integers, got {line.strip()!r}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ValueError(f"line {lineno}: non-integer token in {line.strip()!r}") from None


def read_edgelist(src: str | os.PathLike | TextIO | Iterable[str]) -> Graph:
    """Parse the edge-list format written by :func:`write_edgelist`."""
    if isinstance(src, (str, os.PathLike)):
        with open(src, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    elif isinstance(src, io.TextIOBase):
        lines = src.read().splitlines()
    else:
        lines = list(src)
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list file")
    n, m = _parse_ints(lines[0], 1, 2)
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        i, j = _parse_ints(ln, k, 2)
        if not i < j:
            raise ValueError(f"line {k}: edge must satisfy i < j, got {i} {j}")
        edges.append((i, j))
    g = Graph(n, edges)
    if g.num_edges != m:
        raise ValueError("duplicate edges in edge list")
    return g

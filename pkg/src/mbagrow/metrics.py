"""Measured observables of a grown graph.

Clustering follows the mean-of-local definition: ``C_i = 2 E_i / (k_i (k_i - 1))``
where ``E_i`` counts edges among the neighbors of ``i``. Nodes with degree
below 2 have no defined ``C_i`` and are left out of every average.

Path lengths come from a bit-parallel breadth-first search that advances
64 sources per machine word with one vectorized pass over the adjacency per
level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .errors import InvalidArgumentError, InvalidStateError
from .graph import Graph
from .rng import RandomSource

__all__ = [
    "DegreeHistogram",
    "ClusteringSpectrum",
    "PathLengthEstimate",
    "degree_distribution",
    "neighbor_edge_count",
    "neighbor_edge_counts",
    "local_clustering",
    "clustering_spectrum",
    "global_clustering",
    "distance_sums",
    "total_distance",
    "average_path_length",
    "powerlaw_slope",
    "DEFAULT_EXACT_THRESHOLD",
    "DEFAULT_SOURCES",
]

DEFAULT_EXACT_THRESHOLD = 20_000
DEFAULT_SOURCES = 1000


@dataclass
class DegreeHistogram:
    """Exact degree counts; ``n`` is the number of nodes covered."""

    counts: dict[int, int] = field(default_factory=dict)
    n: int = 0

    def p(self, k: int) -> float:
        return self.counts.get(k, 0) / self.n if self.n else 0.0

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())

    def probabilities(self) -> dict[int, float]:
        return {k: c / self.n for k, c in self.items()}

    @classmethod
    def merge(cls, hists: Iterable["DegreeHistogram"]) -> "DegreeHistogram":
        """Pool several histograms, e.g. across an ensemble."""
        out = cls()
        for h in hists:
            for k, c in h.counts.items():
                out.counts[k] = out.counts.get(k, 0) + c
            out.n += h.n
        out.counts = dict(sorted(out.counts.items()))
        return out


@dataclass
class ClusteringSpectrum:
    """Mean local clustering per degree.

    Stored as exact integer sums of ``2 E_i`` per degree so that pooled
    spectra stay exact; :meth:`mean` performs the single division.
    """

    twice_edges: dict[int, int] = field(default_factory=dict)
    counts: dict[int, int] = field(default_factory=dict)

    def mean(self, k: int) -> float:
        return self.twice_edges[k] / (self.counts[k] * k * (k - 1))

    def degrees(self) -> list[int]:
        return sorted(self.counts)

    def items(self) -> list[tuple[int, float, int]]:
        return [(k, self.mean(k), self.counts[k]) for k in self.degrees()]

    @classmethod
    def merge(cls, spectra: Iterable["ClusteringSpectrum"]) -> "ClusteringSpectrum":
        out = cls()
        for s in spectra:
            for k, c in s.counts.items():
                out.counts[k] = out.counts.get(k, 0) + c
                out.twice_edges[k] = out.twice_edges.get(k, 0) + s.twice_edges[k]
        out.counts = dict(sorted(out.counts.items()))
        out.twice_edges = {k: out.twice_edges[k] for k in out.counts}
        return out


@dataclass(frozen=True)
class PathLengthEstimate:
    value: float
    mode: Literal["exact", "sampled"]
    sources: int
    stderr: float | None = None

    def as_dict(self) -> dict:
        d = {"mode": self.mode, "value": self.value}
        if self.mode == "sampled":
            d["sources"] = self.sources
            d["stderr"] = self.stderr
        return d


def degree_distribution(g: Graph) -> DegreeHistogram:
    degs = g.degrees()
    if len(degs) == 0:
        return DegreeHistogram({}, 0)
    bc = np.bincount(degs)
    counts = {int(k): int(c) for k, c in enumerate(bc) if c}
    return DegreeHistogram(counts, g.node_count)


def neighbor_edge_count(g: Graph, i: int) -> int:
    """Number of edges with both endpoints among the neighbors of ``i``."""
    g._check(i)
    mine = g._nbrset[i]
    nbrset = g._nbrset
    return sum(len(mine & nbrset[u]) for u in g._adj[i]) // 2


def neighbor_edge_counts(g: Graph) -> np.ndarray:
    """``E_i`` for every node, via one set intersection per edge."""
    nbrset = g._nbrset
    acc = [0] * g.node_count
    for v, nbrs in enumerate(g._adj):
        sv = nbrset[v]
        for u in nbrs:
            if u >= v:
                break
            c = len(sv & nbrset[u])
            if c:
                acc[u] += c
                acc[v] += c
    # each triangle at i is seen from both of its edges incident to i
    return np.array(acc, dtype=np.int64) // 2


def local_clustering(g: Graph, i: int) -> float:
    """``2 E_i / (k_i (k_i - 1))``, or 0.0 when ``k_i < 2``."""
    k = g.degree(i)
    if k < 2:
        return 0.0
    return 2 * neighbor_edge_count(g, i) / (k * (k - 1))


def clustering_spectrum(g: Graph, edges_among: np.ndarray | None = None) -> ClusteringSpectrum:
    if edges_among is None:
        edges_among = neighbor_edge_counts(g)
    degs = g.degrees()
    twice: dict[int, int] = {}
    counts: dict[int, int] = {}
    for k, e in zip(degs.tolist(), edges_among.tolist()):
        if k < 2:
            continue
        counts[k] = counts.get(k, 0) + 1
        twice[k] = twice.get(k, 0) + 2 * e
    keys = sorted(counts)
    return ClusteringSpectrum({k: twice[k] for k in keys}, {k: counts[k] for k in keys})


def local_clusterings(g: Graph, edges_among: np.ndarray | None = None) -> np.ndarray:
    """``C_i`` for nodes with ``k_i >= 2`` (in id order); others dropped."""
    if edges_among is None:
        edges_among = neighbor_edge_counts(g)
    degs = g.degrees()
    keep = degs >= 2
    k = degs[keep].astype(np.float64)
    return 2.0 * edges_among[keep] / (k * (k - 1.0))


def global_clustering(g: Graph, edges_among: np.ndarray | None = None) -> float:
    """Mean ``C_i`` over nodes with degree at least 2."""
    c = local_clusterings(g, edges_among)
    if len(c) == 0:
        raise InvalidStateError("no node has degree >= 2")
    return math.fsum(c.tolist()) / len(c)


# -- shortest paths -------------------------------------------------------

_WORDS = 8  # 512 sources per batch


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    n = g.node_count
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(a) for a in g._adj], out=indptr[1:])
    indices = np.fromiter((u for a in g._adj for u in a), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def _bfs_totals(g: Graph, sources: np.ndarray, per_source: bool):
    n = g.node_count
    indptr, indices = _csr(g)
    if len(indices) == 0:
        raise InvalidStateError(
            f"graph is disconnected: node {1 if sources[0] == 0 else 0} unreachable from {int(sources[0])}"
        )
    starts = np.minimum(indptr[:-1], len(indices) - 1)
    isolated = np.diff(indptr) == 0
    batch = 64 * _WORDS
    out = np.zeros(len(sources), dtype=np.int64) if per_source else 0
    for lo in range(0, len(sources), batch):
        src = sources[lo : lo + batch]
        b = len(src)
        words = (b + 63) // 64
        frontier = np.zeros((n, words), dtype="<u8")
        cols = np.arange(b)
        bits = np.left_shift(np.uint64(1), (cols % 64).astype(np.uint64))
        np.bitwise_or.at(frontier, (src, cols // 64), bits)
        visited = frontier.copy()
        total = np.zeros(b, dtype=np.int64) if per_source else 0
        level = 0
        while True:
            level += 1
            nxt = np.bitwise_or.reduceat(frontier[indices], starts, axis=0)
            nxt[isolated] = 0
            nxt &= ~visited
            if not nxt.any():
                break
            visited |= nxt
            if per_source:
                newly = np.unpackbits(nxt.view(np.uint8), axis=1, bitorder="little")[:, :b]
                total += level * newly.sum(axis=0, dtype=np.int64)
            else:
                total += level * int(np.bitwise_count(nxt).sum())
            frontier = nxt
        if int(np.bitwise_count(visited).sum()) != n * b:
            reached = np.unpackbits(visited.view(np.uint8), axis=1, bitorder="little")[:, :b]
            node, col = np.argwhere(reached == 0)[0]
            raise InvalidStateError(
                f"graph is disconnected: node {int(node)} unreachable from {int(src[col])}"
            )
        if per_source:
            out[lo : lo + b] = total
        else:
            out += total
    return out


def _as_sources(g: Graph, sources: Iterable[int]) -> np.ndarray:
    src = np.asarray(list(sources), dtype=np.int64)
    if len(src) and (src.min() < 0 or src.max() >= g.node_count):
        raise InvalidArgumentError("source id out of range")
    return src


def distance_sums(g: Graph, sources: Iterable[int]) -> np.ndarray:
    """Sum of hop distances from each source to every other node.

    Raises InvalidStateError naming an unreachable pair if the graph is
    disconnected.
    """
    src = _as_sources(g, sources)
    if g.node_count <= 1 or len(src) == 0:
        return np.zeros(len(src), dtype=np.int64)
    return _bfs_totals(g, src, per_source=True)


def total_distance(g: Graph, sources: Iterable[int]) -> int:
    """``distance_sums(g, sources).sum()`` without the per-source bookkeeping."""
    src = _as_sources(g, sources)
    if g.node_count <= 1 or len(src) == 0:
        return 0
    return int(_bfs_totals(g, src, per_source=False))


def average_path_length(
    g: Graph,
    mode: Literal["auto", "exact", "sampled"] = "auto",
    *,
    sources: int = DEFAULT_SOURCES,
    rng: RandomSource | int | None = None,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
) -> PathLengthEstimate:
    """Mean shortest-path length over node pairs.

    ``exact`` runs a search from every node. ``sampled`` draws ``sources``
    distinct nodes uniformly and reports the mean of their per-source mean
    distance with its standard error. ``auto`` picks exact up to
    ``exact_threshold`` nodes.
    """
    n = g.node_count
    if n < 2:
        raise InvalidStateError("path length needs at least two nodes")
    if mode == "auto":
        mode = "exact" if n <= exact_threshold else "sampled"
    if mode == "exact":
        return PathLengthEstimate(total_distance(g, range(n)) / (n * (n - 1)), "exact", n)
    if mode != "sampled":
        raise InvalidArgumentError(f"unknown path-length mode {mode!r}")
    if not (1 <= sources <= n):
        raise InvalidArgumentError(f"sources must be in 1..{n}, got {sources}")
    if not isinstance(rng, RandomSource):
        rng = RandomSource(0 if rng is None else rng)
    picked = rng.sample(range(n), sources)
    sums = distance_sums(g, picked)
    value = int(sums.sum()) / (sources * (n - 1))
    stderr = float(np.std(sums / (n - 1), ddof=1) / math.sqrt(sources)) if sources > 1 else float("nan")
    return PathLengthEstimate(value, "sampled", sources, stderr)


def powerlaw_slope(hist: DegreeHistogram, kmin: int, kmax: int) -> float:
    """Least-squares slope of ``ln p(k)`` on ``ln k`` over populated ``k`` in range."""
    ks = [k for k, c in hist.items() if kmin <= k <= kmax and c > 0]
    if len(ks) < 2:
        raise InvalidStateError("fewer than two populated degrees in the fit range")
    x = np.log(np.array(ks, dtype=float))
    y = np.log(np.array([hist.p(k) for k in ks]))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)

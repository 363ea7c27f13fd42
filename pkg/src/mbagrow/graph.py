"""Undirected simple graph indexed by birth order, plus edge-list I/O.

Node ids are dense integers ``0..n-1`` assigned in creation order, so an id
doubles as a birth time. Each node keeps its neighbors in an ascending list
(new nodes always carry the largest id, so appending preserves the order)
and a set for O(1) membership tests.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

import numpy as np

from .errors import EdgeListParseError, InvalidArgumentError, InvalidConfigError

__all__ = [
    "Graph",
    "new_seed_graph",
    "birth_time",
    "read_edge_list",
    "write_edge_list",
    "format_edge_list",
    "parse_edge_list",
]


class Graph:
    """Undirected graph with no self-loops or parallel edges.

    The graph only grows: nodes are appended with
    :meth:`add_node_with_edges` and nothing is ever removed. Alongside the
    adjacency it keeps an endpoint list in which every node appears once
    per incident edge; sampling a uniform position of that list picks a
    node with probability proportional to its degree.
    """

    __slots__ = ("_adj", "_nbrset", "_ends")

    def __init__(self) -> None:
        self._adj: list[list[int]] = []
        self._nbrset: list[set[int]] = []
        self._ends: list[int] = []

    # -- construction --------------------------------------------------

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ``node_count`` nodes from an edge iterable.

        Raises InvalidArgumentError on self-loops, duplicate edges or ids
        outside ``0..node_count-1``.
        """
        g = cls()
        g._adj = [[] for _ in range(node_count)]
        g._nbrset = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InvalidArgumentError(f"self-loop at node {u}")
            if v in g._nbrset[u]:
                raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
            g._nbrset[u].add(v)
            g._nbrset[v].add(u)
            g._adj[u].append(v)
            g._adj[v].append(u)
            g._ends.append(u)
            g._ends.append(v)
        for nbrs in g._adj:
            nbrs.sort()
        return g

    def add_node_with_edges(self, targets: Iterable[int]) -> int:
        """Append a node joined to every id in ``targets``; return its id."""
        targets = list(targets)
        if not targets:
            raise InvalidArgumentError("targets must be nonempty")
        n = len(self._adj)
        if len(set(targets)) != len(targets):
            raise InvalidArgumentError(f"duplicate targets {targets}")
        for v in targets:
            if not (0 <= v < n):
                raise InvalidArgumentError(f"target {v} out of range for {n} nodes")
        return self._append_node(sorted(targets))

    def _append_node(self, targets: list[int]) -> int:
        # targets must be sorted, distinct and in range
        n = len(self._adj)
        adj = self._adj
        nbrset = self._nbrset
        ends = self._ends
        for v in targets:
            adj[v].append(n)
            nbrset[v].add(n)
            ends.append(v)
            ends.append(n)
        adj.append(targets)
        nbrset.append(set(targets))
        return n

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = [list(a) for a in self._adj]
        g._nbrset = [set(s) for s in self._nbrset]
        g._ends = list(self._ends)
        return g

    # -- queries -------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return len(self._ends) // 2

    def __len__(self) -> int:
        return len(self._adj)

    def _check(self, i: int) -> None:
        if not (0 <= i < len(self._adj)):
            raise InvalidArgumentError(f"node {i} out of range for {len(self._adj)} nodes")

    def degree(self, i: int) -> int:
        self._check(i)
        return len(self._adj[i])

    def neighbors(self, i: int) -> frozenset[int]:
        self._check(i)
        return frozenset(self._nbrset[i])

    def sorted_neighbors(self, i: int) -> tuple[int, ...]:
        self._check(i)
        return tuple(self._adj[i])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbrset[u]

    def total_degree(self) -> int:
        """Sum of all degrees, equal to twice the edge count."""
        return len(self._ends)

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=len(self._adj))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield ``(newer, older)`` pairs, grouped by the newer node in id order."""
        for v, nbrs in enumerate(self._adj):
            for u in nbrs:
                if u >= v:
                    break
                yield v, u

    def to_csr(self):
        """Symmetric 0/1 adjacency as a ``scipy.sparse.csr_array``."""
        from scipy import sparse

        n = len(self._adj)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum([len(a) for a in self._adj], out=indptr[1:])
        indices = np.fromiter(
            (u for a in self._adj for u in a), dtype=np.int32, count=int(indptr[-1])
        )
        data = np.ones(len(indices), dtype=np.int8)
        return sparse.csr_array((data, indices, indptr), shape=(n, n))

    def bfs_distances(self, source: int) -> list[int]:
        """Hop distances from ``source``; -1 marks unreachable nodes."""
        self._check(source)
        dist = [-1] * len(self._adj)
        dist[source] = 0
        queue = deque([source])
        adj = self._adj
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du
                    queue.append(v)
        return dist

    def is_connected(self) -> bool:
        if not self._adj:
            return True
        return min(self.bfs_distances(0)) >= 0

    def validate(self) -> None:
        """Assert the structural invariants; raise AssertionError on failure."""
        total = 0
        for i, (nbrs, s) in enumerate(zip(self._adj, self._nbrset)):
            assert i not in s, f"self-loop at {i}"
            assert len(nbrs) == len(s), f"parallel edge at {i}"
            assert s == set(nbrs)
            assert nbrs == sorted(nbrs), f"adjacency of {i} not sorted"
            for j in nbrs:
                assert i in self._nbrset[j], f"asymmetric edge {i}-{j}"
            total += len(nbrs)
        assert total == len(self._ends)
        counts = np.bincount(np.asarray(self._ends, dtype=np.int64), minlength=len(self._adj))
        assert np.array_equal(counts, self.degrees()), "endpoint list out of sync"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def new_seed_graph(m0: int) -> Graph:
    """Complete graph on ``m0 >= 2`` nodes."""
    if m0 < 2:
        raise InvalidConfigError(f"seed size must be >= 2, got {m0}")
    g = Graph()
    g._adj.append([])
    g._nbrset.append(set())
    for n in range(1, m0):
        g._append_node(list(range(n)))
    return g


def birth_time(node: int) -> int:
    """Network size right after ``node`` was created (seed node i -> i + 1)."""
    return node + 1


# -- edge-list text format ----------------------------------------------


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def write_edge_list(g: Graph, path_or_file) -> None:
    """Write one ``"u v"`` line per edge, in creation order of the newer node."""
    if hasattr(path_or_file, "write"):
        path_or_file.write(format_edge_list(g))
    else:
        with open(path_or_file, "w", encoding="ascii", newline="\n") as fh:
            fh.write(format_edge_list(g))


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse edge-list lines; blank lines and ``#`` comments are skipped.

    The node count is one more than the largest id seen.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two node ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer node id in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, f"negative node id in {line!r}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop {u} {v}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
        top = max(top, u, v)
    return Graph.from_edges(top + 1, edges)


def read_edge_list(path_or_file) -> Graph:
    if hasattr(path_or_file, "read"):
        return parse_edge_list(path_or_file)
    with open(path_or_file, encoding="ascii") as fh:
        return parse_edge_list(fh)

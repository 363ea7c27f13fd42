import itertools

import pytest

from mbagrow.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def brute_force_apl(g):
    """All-pairs BFS in plain Python, kept independent of the bitset search."""
    n = g.node_count
    total = 0
    for s in range(n):
        d = g.bfs_distances(s)
        assert min(d) >= 0
        total += sum(d)
    return total / (n * (n - 1))


def isomorphic(g, h):
    """Brute-force isomorphism test for graphs of at most ~7 nodes."""
    if g.node_count != h.node_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees().tolist()) != sorted(h.degrees().tolist()):
        return False
    eg = {frozenset(e) for e in g.edges()}
    eh = {frozenset(e) for e in h.edges()}
    for perm in itertools.permutations(range(g.node_count)):
        if all(frozenset((perm[u], perm[v])) in eh for u, v in map(tuple, eg)):
            return True
    return False


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])

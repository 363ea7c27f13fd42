"""Exact enumeration of the local growth process on tiny graphs.

Every (creator, neighbor subset) branch is expanded with its exact rational
probability, and branches are merged by isomorphism class after each step.
The resulting outcome distribution is the ground truth for goodness-of-fit
checks of the Monte Carlo grower.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from scipy import stats

from .errors import InvalidArgumentError, InvalidStateError, ResourceLimitError
from .graph import Graph, new_seed_graph
from .growth import GrowthConfig, Model, grow
from .metrics import neighbor_edge_count
from .rng import derive_seed

__all__ = [
    "Signature",
    "OutcomeDistribution",
    "GoodnessOfFit",
    "canonical_signature",
    "local_branches",
    "step_expectations",
    "enumerate_local",
    "compare_to_montecarlo",
    "DEFAULT_BRANCH_CAP",
]

DEFAULT_BRANCH_CAP = 1_000_000

Signature = tuple


def _refined_keys(g: Graph) -> list[tuple]:
    adj = g._adj
    return [(len(a), tuple(sorted(len(adj[u]) for u in a))) for a in adj]


def canonical_signature(g: Graph) -> Signature:
    """Isomorphism-invariant signature of a small graph.

    Nodes are ordered by (degree, sorted neighbor degrees); ties are broken
    by trying every permutation inside each tie group and keeping the
    lexicographically smallest relabeled edge list. Because the ordering key
    is itself invariant, the result is a true canonical form.
    """
    keys = _refined_keys(g)
    order = sorted(range(g.node_count), key=lambda i: keys[i])
    groups = [list(grp) for _, grp in itertools.groupby(order, key=lambda i: keys[i])]
    edges = [(v, u) for v, u in g.edges()]
    best = None
    for choice in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        label = {}
        for perm in choice:
            for node in perm:
                label[node] = len(label)
        relabeled = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return (tuple(sorted(keys)), best)


def local_branches(g: Graph, m: int):
    """Yield ``(probability, targets)`` for every branch of one local step."""
    total = g.total_degree()
    for creator, nbrs in enumerate(g._adj):
        k = len(nbrs)
        if k == 0:
            continue
        if k < m - 1:
            raise InvalidStateError(f"node {creator} has degree {k} < m - 1 = {m - 1}")
        p_creator = Fraction(k, total)
        subsets = list(itertools.combinations(nbrs, m - 1))
        p_subset = Fraction(1, len(subsets))
        for sub in subsets:
            yield p_creator * p_subset, sorted((creator, *sub))


def step_expectations(g: Graph, m: int) -> tuple[list[Fraction], list[Fraction]]:
    """Exact one-step expected increments of ``k_i`` and of ``E_i`` for every node."""
    n = g.node_count
    dk = [Fraction(0)] * n
    de = [Fraction(0)] * n
    before = [neighbor_edge_count(g, i) for i in range(n)]
    for p, targets in local_branches(g, m):
        h = g.copy()
        h._append_node(targets)
        for i in targets:
            dk[i] += p
        for i in range(n):
            diff = neighbor_edge_count(h, i) - before[i]
            if diff:
                de[i] += p * diff
    return dk, de


@dataclass
class OutcomeDistribution:
    """Exact distribution over isomorphism classes of grown graphs."""

    m0: int
    m: int
    steps: int
    probabilities: dict[Signature, Fraction]
    representatives: dict[Signature, Graph] = field(repr=False)

    def __len__(self) -> int:
        return len(self.probabilities)

    def outcomes(self) -> list[tuple[Signature, Fraction]]:
        return sorted(self.probabilities.items())

    def total_probability(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))

    def expected_degree_histogram(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for sig, p in self.probabilities.items():
            for k in self.representatives[sig].degrees().tolist():
                out[k] = out.get(k, Fraction(0)) + p
        return dict(sorted(out.items()))

    def expected_global_clustering(self) -> Fraction:
        total = Fraction(0)
        for sig, p in self.probabilities.items():
            g = self.representatives[sig]
            cs = [
                Fraction(2 * neighbor_edge_count(g, i), g.degree(i) * (g.degree(i) - 1))
                for i in range(g.node_count)
                if g.degree(i) >= 2
            ]
            total += p * sum(cs, Fraction(0)) / len(cs)
        return total


def enumerate_local(
    m0: int, m: int, steps: int, *, branch_cap: int = DEFAULT_BRANCH_CAP
) -> OutcomeDistribution:
    """Exact outcome distribution after ``steps`` local-growth steps from ``K_m0``."""
    if steps < 0:
        raise InvalidArgumentError("steps must be >= 0")
    GrowthConfig(m=m, m0=m0, t_final=m0 + steps)  # validates the parameters
    seed = new_seed_graph(m0)
    sig = canonical_signature(seed)
    probs = {sig: Fraction(1)}
    reps = {sig: seed}
    expanded = 0
    for _ in range(steps):
        nprobs: dict[Signature, Fraction] = {}
        nreps: dict[Signature, Graph] = {}
        for s, p in probs.items():
            g = reps[s]
            for q, targets in local_branches(g, m):
                expanded += 1
                if expanded > branch_cap:
                    raise ResourceLimitError(f"enumeration exceeded {branch_cap} branches")
                h = g.copy()
                h._append_node(targets)
                hs = canonical_signature(h)
                nprobs[hs] = nprobs.get(hs, Fraction(0)) + p * q
                nreps.setdefault(hs, h)
        probs, reps = nprobs, nreps
    return OutcomeDistribution(m0, m, steps, probs, reps)


@dataclass
class GoodnessOfFit:
    statistic: float
    dof: int
    p_value: float
    runs: int
    observed: dict[Signature, int]
    expected: dict[Signature, float]
    unmatched: int = 0

    def passed(self, alpha: float = 0.01) -> bool:
        return self.unmatched == 0 and self.p_value > alpha


def compare_to_montecarlo(
    dist: OutcomeDistribution,
    config: GrowthConfig,
    runs: int,
    grower: Callable[[GrowthConfig], Graph] = grow,
) -> GoodnessOfFit:
    """Pearson chi-square of ``runs`` simulated outcomes against ``dist``.

    Run ``r`` uses ``derive_seed(config.seed, r)``. Any simulated outcome
    outside the exact support counts as unmatched and fails the test.
    """
    if runs < 1:
        raise InvalidArgumentError(f"runs must be >= 1, got {runs}")
    if (
        config.model is not Model.LOCAL
        or config.m != dist.m
        or config.m0 != dist.m0
        or config.t_final != dist.m0 + dist.steps
    ):
        raise InvalidArgumentError(
            f"config (m={config.m}, m0={config.m0}, t_final={config.t_final}) does not match "
            f"enumeration (m={dist.m}, m0={dist.m0}, steps={dist.steps})"
        )
    observed = {s: 0 for s in dist.probabilities}
    unmatched = 0
    for r in range(runs):
        s = canonical_signature(grower(config.with_seed(derive_seed(config.seed, r))))
        if s in observed:
            observed[s] += 1
        else:
            unmatched += 1
    keys = sorted(observed)
    expected = {s: float(dist.probabilities[s]) * runs for s in keys}
    if len(keys) == 1:
        stat, p_value = 0.0, 1.0
    else:
        f_obs = [observed[s] for s in keys]
        f_exp = [expected[s] * (runs - unmatched) / runs for s in keys]
        if runs == unmatched:
            stat, p_value = math.inf, 0.0
        else:
            res = stats.chisquare(f_obs, f_exp)
            stat, p_value = float(res.statistic), float(res.pvalue)
    if unmatched:
        p_value = 0.0
    return GoodnessOfFit(stat, len(keys) - 1, p_value, runs, observed, expected, unmatched)

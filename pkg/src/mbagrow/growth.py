"""Growth processes: the local-attachment model and a classic BA baseline.

Local model, one step: pick a creator with probability proportional to its
degree, then join the new node to the creator and to ``m - 1`` of the
creator's neighbors drawn uniformly without replacement. Any given neighbor
is therefore hit with probability ``(m - 1) / k_creator``.

BA baseline, one step: join the new node to ``m`` distinct existing nodes,
each drawn proportionally to degree and renormalized over the nodes not yet
picked. Both models start from the same complete seed graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

from .errors import InvalidArgumentError, InvalidConfigError, InvalidStateError
from .graph import Graph, new_seed_graph
from .rng import MASK64, RandomSource

T = TypeVar("T")

__all__ = [
    "Model",
    "GrowthConfig",
    "select_creator",
    "attach_local",
    "attach_ba",
    "grow",
    "grow_with_traces",
    "grow_snapshots",
]


class Model(str, enum.Enum):
    LOCAL = "local"
    BA = "ba"


@dataclass(frozen=True)
class GrowthConfig:
    """Parameters of one growth run.

    ``m0`` defaults to ``m``. Larger seeds are allowed, smaller ones are not
    because a seed node must own at least ``m - 1`` neighbors before it can
    act as a creator.
    """

    m: int = 2
    t_final: int = 10_000
    seed: int = 0
    model: Model = Model.LOCAL
    m0: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "model", Model(self.model))
        if self.m0 is None:
            object.__setattr__(self, "m0", self.m)
        if self.m < 2:
            raise InvalidConfigError(f"m must be >= 2, got {self.m}")
        if self.m0 < self.m:
            raise InvalidConfigError(f"m0 must be >= m, got m0={self.m0} < m={self.m}")
        if self.t_final < self.m0:
            raise InvalidConfigError(f"t_final must be >= m0, got {self.t_final} < {self.m0}")
        if not (0 <= self.seed <= MASK64):
            raise InvalidConfigError(f"seed must fit in 64 unsigned bits, got {self.seed}")

    def with_seed(self, seed: int) -> "GrowthConfig":
        return GrowthConfig(m=self.m, t_final=self.t_final, seed=seed, model=self.model, m0=self.m0)


def select_creator(g: Graph, rng: RandomSource) -> int:
    """Node ``i`` with probability ``k_i / sum_j k_j``."""
    ends = g._ends
    if not ends:
        raise InvalidStateError("cannot select a creator in a graph without edges")
    return ends[rng.below(len(ends))]


def _local_targets(g: Graph, creator: int, m: int, rng: RandomSource) -> list[int]:
    nbrs = g._adj[creator]
    k = len(nbrs)
    if k < m - 1:
        raise InvalidStateError(
            f"creator {creator} has degree {k} < m - 1 = {m - 1}; seed too small"
        )
    if m == 2:
        chosen = [nbrs[rng.below(k)]]
    else:
        chosen = rng.sample(nbrs, m - 1)
    chosen.append(creator)
    chosen.sort()
    return chosen


def attach_local(g: Graph, creator: int, m: int, rng: RandomSource) -> int:
    """Add a node joined to ``creator`` and ``m - 1`` random neighbors of it."""
    g._check(creator)
    return g._append_node(_local_targets(g, creator, m, rng))


def _ba_targets(g: Graph, m: int, rng: RandomSource) -> list[int]:
    # rejection on the endpoint list == renormalizing over the unpicked nodes
    ends = g._ends
    n_ends = len(ends)
    if g.node_count < m:
        raise InvalidStateError(f"need at least m={m} nodes, have {g.node_count}")
    picked: set[int] = set()
    below = rng.below
    while len(picked) < m:
        picked.add(ends[below(n_ends)])
    return sorted(picked)


def attach_ba(g: Graph, m: int, rng: RandomSource) -> int:
    """Add a node joined to ``m`` distinct degree-proportional picks."""
    return g._append_node(_ba_targets(g, m, rng))


def _stepper(config: GrowthConfig) -> Callable[[Graph, RandomSource], None]:
    m = config.m
    if config.model is Model.LOCAL:

        def step(g: Graph, rng: RandomSource) -> None:
            g._append_node(_local_targets(g, select_creator(g, rng), m, rng))

    else:

        def step(g: Graph, rng: RandomSource) -> None:
            g._append_node(_ba_targets(g, m, rng))

    return step


def grow(config: GrowthConfig) -> Graph:
    """Grow a graph of ``config.t_final`` nodes; deterministic in ``config``."""
    g = new_seed_graph(config.m0)
    rng = RandomSource(config.seed)
    step = _stepper(config)
    for _ in range(config.t_final - config.m0):
        step(g, rng)
    return g


def grow_with_traces(
    config: GrowthConfig, watched: Iterable[int]
) -> tuple[Graph, dict[int, list[tuple[int, int]]]]:
    """Grow like :func:`grow` while recording ``(t, k)`` for watched nodes.

    A node's trace starts at the first size at which it exists (``m0`` for
    seed nodes, ``id + 1`` otherwise) and has one entry per later step.
    The graph is identical to ``grow(config)``.
    """
    watched = sorted(set(watched))
    for i in watched:
        if not (0 <= i < config.t_final):
            raise InvalidArgumentError(f"watched node {i} not in 0..{config.t_final - 1}")
    g = new_seed_graph(config.m0)
    rng = RandomSource(config.seed)
    step = _stepper(config)
    traces: dict[int, list[tuple[int, int]]] = {i: [] for i in watched}
    adj = g._adj

    def record(t: int) -> None:
        for i in watched:
            if i < t:
                traces[i].append((t, len(adj[i])))

    record(config.m0)
    for t in range(config.m0 + 1, config.t_final + 1):
        step(g, rng)
        record(t)
    return g, traces


def grow_snapshots(
    config: GrowthConfig, sizes: Iterable[int], observe: Callable[[Graph], T]
) -> list[T]:
    """Call ``observe`` on the live graph each time it reaches a size in ``sizes``.

    Results come back in ascending size order. ``observe`` must not mutate
    the graph. The run follows ``grow(config)`` and stops at the largest size.
    """
    sizes = sorted(set(sizes))
    if sizes and (sizes[0] < config.m0 or sizes[-1] > config.t_final):
        raise InvalidArgumentError(f"sizes must lie in {config.m0}..{config.t_final}")
    g = new_seed_graph(config.m0)
    rng = RandomSource(config.seed)
    step = _stepper(config)
    out: list[T] = []
    pending = iter(sizes)
    nxt = next(pending, None)
    while nxt is not None:
        while g.node_count < nxt:
            step(g, rng)
        out.append(observe(g))
        nxt = next(pending, None)
    return out

"""Monte Carlo ensembles over independently seeded realizations."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

import numpy as np

from .errors import InvalidArgumentError
from .growth import GrowthConfig
from .rng import derive_seed

T = TypeVar("T")

__all__ = ["EnsembleStats", "realization_configs", "run_ensemble"]


@dataclass(frozen=True)
class EnsembleStats:
    """Mean and standard error (sample std / sqrt(runs)) of one observable."""

    mean: float
    stderr: float
    runs: int

    @classmethod
    def from_samples(cls, samples: Sequence[float]) -> "EnsembleStats":
        x = np.asarray(samples, dtype=float)
        if x.size == 0:
            raise InvalidArgumentError("no samples")
        se = float(np.std(x, ddof=1) / math.sqrt(x.size)) if x.size > 1 else float("nan")
        return cls(math.fsum(x.tolist()) / x.size, se, int(x.size))


def realization_configs(config: GrowthConfig, runs: int) -> list[GrowthConfig]:
    """Per-realization configs; realization ``r`` is seeded with ``derive_seed(config.seed, r)``."""
    if runs < 1:
        raise InvalidArgumentError(f"runs must be >= 1, got {runs}")
    return [config.with_seed(derive_seed(config.seed, r)) for r in range(runs)]


def run_ensemble(
    fn: Callable[[GrowthConfig], T],
    config: GrowthConfig,
    runs: int,
    workers: int = 1,
) -> list[T]:
    """Evaluate ``fn`` on every realization, returned in realization order.

    With ``workers > 1`` realizations fan out to a process pool; ``fn`` must
    then be picklable. Results do not depend on ``workers``.
    """
    cfgs = realization_configs(config, runs)
    if workers <= 1:
        return [fn(c) for c in cfgs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cfgs, chunksize=max(1, runs // (4 * workers))))

"""Closed-form predictions of the mean-field theory, used as test oracles.

The degree distribution, clustering spectrum and whole-network clustering
have closed forms only for ``m = 2``; those functions take no ``m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError

__all__ = [
    "AnalyticPrediction",
    "predicted_degree",
    "predicted_pk",
    "predicted_ck",
    "predicted_global_clustering",
    "global_clustering_terms",
    "predicted_apl_line",
    "predicted_ei_bound",
    "GLOBAL_CLUSTERING_TOL",
]

GLOBAL_CLUSTERING_TOL = 1e-8


@dataclass(frozen=True)
class AnalyticPrediction:
    name: str
    parameters: dict
    value: float


def predicted_degree(m: int, t: int, t_i: int) -> float:
    """Expected degree at size ``t`` of a node born at size ``t_i``: ``m sqrt(t / t_i)``."""
    if m < 2:
        raise InvalidArgumentError(f"m must be >= 2, got {m}")
    if not (1 <= t_i <= t):
        raise InvalidArgumentError(f"need 1 <= t_i <= t, got t_i={t_i}, t={t}")
    return m * math.sqrt(t / t_i)


def predicted_pk(k: int) -> float:
    """Stationary degree distribution for m = 2: ``12 / (k (k+1) (k+2))``."""
    if k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k}")
    return 12.0 / (k * (k + 1) * (k + 2))


def predicted_ck(k: int) -> float:
    """Local clustering of a degree-``k`` node for m = 2."""
    if k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k}")
    return 2.0 / k


def _tail_bound(K: int) -> float:
    # 24 * sum_{k>K} k^-4 <= 24 * integral_K^inf x^-4 dx
    return 8.0 / K**3


def global_clustering_terms(tol: float = GLOBAL_CLUSTERING_TOL) -> list[float]:
    """Terms ``2 p(k) / k`` for ``k = 2..K``, with ``K`` the first cutoff whose tail bound is below ``tol``."""
    terms = []
    k = 2
    while True:
        terms.append(24.0 / (k * k * (k + 1) * (k + 2)))
        if _tail_bound(k) < tol:
            return terms
        k += 1


def predicted_global_clustering(tol: float = GLOBAL_CLUSTERING_TOL) -> float:
    """Whole-network clustering for m = 2, ``2 sum_k p(k) / k`` (about 0.7392)."""
    return math.fsum(global_clustering_terms(tol))


def predicted_apl_line(t: int, m: int) -> float:
    """Reference line ``ln t / ln <k>`` with the asymptotic mean degree ``<k> = 2m``."""
    if t < 2:
        raise InvalidArgumentError(f"t must be >= 2, got {t}")
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")
    return math.log(t) / math.log(2 * m)


def predicted_ei_bound(m: int, k: float) -> float:
    """Lower bound on the edges among a degree-``k`` node's neighbors.

    Exact (``k - 1``) for m = 2.
    """
    if m < 2:
        raise InvalidArgumentError(f"m must be >= 2, got {m}")
    if k < m:
        raise InvalidArgumentError(f"k must be >= m, got k={k}, m={m}")
    if m == 2:
        return k - 1
    return 2 * (m - 1) * k / m - (m - 1)

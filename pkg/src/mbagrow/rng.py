"""Deterministic random source and per-realization seed derivation.

The generator is the Mersenne Twister from :mod:`random`, used only through
``getrandbits``. Integer seeding and ``getrandbits`` are both stable across
platforms and Python versions, and bounded integers come from plain
rejection sampling here rather than from library helpers whose algorithms
have changed between releases.
"""

from __future__ import annotations

import random
from typing import Sequence, TypeVar

from .errors import InvalidArgumentError

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """SplitMix64 finalizer of a 64-bit integer."""
    x = (x + GOLDEN_GAMMA) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(master_seed: int, realization: int) -> int:
    """Seed of realization ``r`` under ``master_seed``.

    ``splitmix64(splitmix64(master) ^ r)``: depends only on the pair, so
    realizations can run in any order.
    """
    if not (0 <= master_seed <= MASK64):
        raise InvalidArgumentError(f"seed must fit in 64 unsigned bits, got {master_seed}")
    if realization < 0:
        raise InvalidArgumentError("realization index must be >= 0")
    return splitmix64(splitmix64(master_seed) ^ (realization & MASK64))


class RandomSource:
    """Seeded PRNG with the two primitives the growth models need."""

    __slots__ = ("_bits",)

    def __init__(self, seed: int) -> None:
        if not (0 <= seed <= MASK64):
            raise InvalidArgumentError(f"seed must fit in 64 unsigned bits, got {seed}")
        self._bits = random.Random(seed).getrandbits

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise InvalidArgumentError(f"upper bound must be positive, got {n}")
        k = n.bit_length()
        bits = self._bits
        r = bits(k)
        while r >= n:
            r = bits(k)
        return r

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        """``k`` distinct positions of ``seq`` by partial Fisher-Yates."""
        n = len(seq)
        if not (0 <= k <= n):
            raise InvalidArgumentError(f"cannot draw {k} of {n} without replacement")
        pool = list(seq)
        for j in range(k):
            r = j + self.below(n - j)
            pool[j], pool[r] = pool[r], pool[j]
        return pool[:k]

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return self._bits(53) / 9007199254740992.0

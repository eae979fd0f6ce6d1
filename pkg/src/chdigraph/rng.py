"""Portable seeded randomness.

Every random choice in the package comes from a PCG64 stream seeded through
``numpy.random.SeedSequence``. Only the raw 64-bit output of the bit
generator is consumed; bounded integers and samples are derived here so the
sequence depends on nothing but (seed, stream key).

Stream splitting: ``stream(seed, k1, k2, ...)`` uses the keys as the
SeedSequence ``spawn_key``, so trial ``t`` of a batch seeded with ``s`` is
``stream(s, t)`` no matter which worker runs it.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

import numpy as np

T = TypeVar("T")

_TWO64 = 1 << 64


class Stream:
    __slots__ = ("_bits",)

    def __init__(self, seed: int, *keys: int):
        if seed < 0:
            raise ValueError("seed must be non-negative")
        ss = np.random.SeedSequence(seed, spawn_key=tuple(keys))
        self._bits = np.random.PCG64(ss)

    def next_u64(self) -> int:
        return int(self._bits.random_raw())

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection sampling."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = _TWO64 - (_TWO64 % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def sample(self, items: Sequence[T], k: int) -> list[T]:
        """``k`` distinct items, in draw order (partial Fisher-Yates)."""
        pool = list(items)
        if k > len(pool):
            raise ValueError(f"cannot sample {k} from {len(pool)} items")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def stream(seed: int, *keys: int) -> Stream:
    return Stream(seed, *keys)

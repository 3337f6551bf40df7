"""Deterministic random streams.

Every unit of randomized work (a fuzz trial, a search restart, an internal
shuffle) draws from its own substream derived from ``(seed, index)`` with a
64-bit split-mix hash.  Results are therefore independent of how work is
chunked across workers: trial i sees the same bits no matter which thread
runs it.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


def substream_seed(seed: int, index: int) -> int:
    """64-bit state for work unit ``index`` under global ``seed``."""
    return _mix((seed & _MASK) + ((index + 1) * _GOLDEN & _MASK))


class SplitMix64:
    """Tiny, fast generator; quality is ample for sampling test configurations."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return _mix(self.state)

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, k: int) -> int:
        """Uniform integer in [0, k), rejection-sampled to avoid modulo bias."""
        if k <= 0:
            raise ValueError("k must be positive")
        bound = (_MASK + 1) - ((_MASK + 1) % k)
        while True:
            u = self.next_u64()
            if u < bound:
                return u % k

    def sample_indices(self, n: int, size: int) -> list[int]:
        """``size`` distinct indices from range(n), partial Fisher-Yates."""
        idx = list(range(n))
        for i in range(size):
            j = i + self.randint(n - i)
            idx[i], idx[j] = idx[j], idx[i]
        return idx[:size]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

"""Seeded, cross-platform deterministic random sampling.

Reports and property sweeps must be byte-identical across runs and platforms,
so sampling is built on splitmix64 (pure 64-bit integer arithmetic) instead of
a platform RNG.  Every consumer derives child streams from an explicit seed.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 stream; uniform doubles use the top 53 bits."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0 ** -53)

    def spawn(self, tag: int) -> "SplitMix64":
        """Deterministic child stream for the given integer tag."""
        return SplitMix64((self.next_u64() ^ (tag * _GOLDEN)) & _MASK)


def child_seed(seed: int, tag: int) -> int:
    """Stable derived seed for per-family / per-case streams."""
    return ((seed * _GOLDEN) ^ ((tag + 1) * 0xBF58476D1CE4E5B9)) & _MASK

"""Small deterministic PRNG for reproducible experiment sampling.

A splitmix-style 64-bit generator: tiny state, platform-independent
output, and no dependence on the numpy RNG implementation of the day.
Every CLI command derives its random draws from one of these seeded
streams so that a recorded seed reproduces a run bit for bit.
"""

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator with splitmix output mixing."""

    def __init__(self, seed):
        self._state = int(seed) & _MASK64

    def next_u64(self):
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, low=0.0, high=1.0):
        """Uniform double in [low, high) with 53-bit resolution."""
        u = self.next_u64() >> 11
        return low + (high - low) * (u * (1.0 / (1 << 53)))

    def uniforms(self, n, low=0.0, high=1.0):
        return np.array([self.uniform(low, high) for _ in range(n)])

    def spawn(self):
        """Independent child stream (seeded from this stream's output)."""
        return SplitMix64(self.next_u64())

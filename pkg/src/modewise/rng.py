"""Deterministic random numbers for reproducible fixtures.

The generators in :mod:`modewise.states` and :mod:`modewise.symplectic` must
produce bit-identical output for a given seed on every platform, so instead
of a platform RNG we fix one tiny, fully documented algorithm:

splitmix64
    64-bit state.  Each draw advances the state by the odd constant
    ``0x9E3779B97F4A7C15`` and scrambles the result::

        state = (state + 0x9E3779B97F4A7C15) mod 2^64
        z = state
        z = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
        z = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
        output = z XOR (z >> 31)

uniform in [0, 1)
    the top 53 bits of one splitmix64 output: ``(u64 >> 11) * 2^-53``.

standard normal
    Box-Muller on two consecutive uniforms ``u1, u2``::

        r = sqrt(-2 ln(1 - u1))          # 1 - u1 in (0, 1], no log(0)
        z0 = r * cos(2 pi u2)            # returned first
        z1 = r * sin(2 pi u2)            # cached, returned on the next call

Any implementation following this recipe reproduces the package's random
covariance matrices exactly.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream with uniform and Box-Muller normal draws."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform_in(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def normal(self) -> float:
        """Standard normal deviate (Box-Muller, documented above)."""
        if self._spare_normal is not None:
            z = self._spare_normal
            self._spare_normal = None
            return z
        u1 = self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(1.0 - u1))
        theta = 2.0 * math.pi * u2
        self._spare_normal = r * math.sin(theta)
        return r * math.cos(theta)

    def normals(self, count: int) -> list[float]:
        return [self.normal() for _ in range(count)]

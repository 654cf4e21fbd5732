"""Reproducible pseudorandom sampling.

A 64-bit linear congruential generator

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

seeded with ``seed mod 2**64``.  Each draw advances the state once and uses
its top 53 bits as a double in [0, 1).  The recurrence is fixed so that
reports stay identical across platforms and implementations.
"""

from __future__ import annotations

import math

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class LCG64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + (self.next_u64() >> 11) % (hi - lo + 1)

    def sign(self) -> int:
        return 1 if self.next_u64() >> 63 else -1

    def complex_log_uniform(self, log10_lo: float = -3.0, log10_hi: float = 3.0) -> complex:
        """Point with log10|z| uniform in [lo, hi] and argument uniform in [-pi, pi)."""
        r = 10.0 ** self.uniform(log10_lo, log10_hi)
        theta = self.uniform(-math.pi, math.pi)
        return complex(r * math.cos(theta), r * math.sin(theta))

"""Deterministic parameter sampling.

The generator is SplitMix64 (Steele, Lea and Flood).  A case's stream is
seeded from blake2b over (seed, id, n, extra params, trial), so a case can
be reproduced without replaying any other case.  A nonzero rational is
num/den with each of num, den taken from [-9, 9] minus {0} as
``VALUES[next() % 18]``.
"""

from __future__ import annotations

import hashlib
import json

from flint import fmpq

__all__ = ["SplitMix64", "case_seed", "draw_rational", "VALUES"]

_MASK = (1 << 64) - 1

VALUES = tuple(v for v in range(-9, 10) if v != 0)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def choice(self, seq):
        return seq[self.next() % len(seq)]


def case_seed(seed: int, *parts) -> int:
    """64-bit seed derived from the run seed and a case key."""
    key = json.dumps([int(seed), *parts], sort_keys=True, separators=(",", ":"), default=str)
    return int.from_bytes(hashlib.blake2b(key.encode(), digest_size=8).digest(), "little")


def draw_rational(rng: SplitMix64) -> fmpq:
    return fmpq(rng.choice(VALUES), rng.choice(VALUES))

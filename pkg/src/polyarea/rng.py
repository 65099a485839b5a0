"""SplitMix64, the fixed generator behind every instance generator.

The stream is part of the file-reproducibility contract, so it is pinned
here rather than borrowed from a library whose algorithms may change:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    out <- z ^ (z >> 31)

Bounded draws use rejection on the top bits, so they are unbiased and
consume a deterministic number of outputs per accepted value.
"""
from __future__ import annotations

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * MUL1) & MASK
        z = ((z ^ (z >> 27)) * MUL2) & MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        bits = (bound - 1).bit_length()
        while True:
            if bits <= 64:
                r = self.next_u64() >> (64 - bits)
            else:
                r = 0
                got = 0
                while got < bits:
                    r = (r << 64) | self.next_u64()
                    got += 64
                r >>= got - bits
            if r < bound:
                return r

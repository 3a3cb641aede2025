"""Portable pseudo-random numbers for reproducible instances.

The generator is xorshift64* (Marsaglia shifts 12, 25, 27; multiplier
0x2545F4914F6CDD1D), seeded through one round of splitmix64 (increment
0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) so that
any 64-bit seed, including 0, gives a nonzero state.  Outputs depend only on
the seed, never on the platform or the Python version.
"""

from fractions import Fraction

MASK64 = (1 << 64) - 1
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D
SPLITMIX_INCREMENT = 0x9E3779B97F4A7C15
SPLITMIX_MIX1 = 0xBF58476D1CE4E5B9
SPLITMIX_MIX2 = 0x94D049BB133111EB

DYADIC_BITS = 31


def splitmix64(seed: int) -> int:
    z = (seed + SPLITMIX_INCREMENT) & MASK64
    z = ((z ^ (z >> 30)) * SPLITMIX_MIX1) & MASK64
    z = ((z ^ (z >> 27)) * SPLITMIX_MIX2) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        state = splitmix64(seed & MASK64)
        self.state = state or SPLITMIX_INCREMENT

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULTIPLIER) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]."""
        return low + self.below(high - low + 1)

    def dyadic(self) -> Fraction:
        """Uniform rational in [-1, 1) with denominator 2**31."""
        r = self.next_u64() >> (64 - DYADIC_BITS - 1)
        return Fraction(r - (1 << DYADIC_BITS), 1 << DYADIC_BITS)

    def shuffle(self, items: list) -> list:
        """Fisher-Yates shuffle, in place; returns ``items``."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

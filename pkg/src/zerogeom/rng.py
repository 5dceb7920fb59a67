"""SplitMix64, the single source of randomness for seeded runs.

State is one 64-bit word.  ``next_u64`` adds the golden-ratio increment
``0x9E3779B97F4A7C15`` and returns the Stafford "mix13" finalizer of the new
state.  Child streams are derived with :func:`derive`, which folds each key
into the seed through the same finalizer, so ``derive(seed, trial)`` is a
pure function of its arguments and trials can be generated in any order.
Integer draws use rejection sampling and are unbiased.
"""

from __future__ import annotations

from fractions import Fraction

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def derive(seed: int, *keys: int) -> int:
    s = seed & MASK
    for k in keys:
        s = mix64(s + GAMMA * (k + 1))
    return s


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        if n & (n - 1) == 0:
            return self.next_u64() & (n - 1)
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def rational(self, num_lo: int, num_hi: int, den_hi: int, nonzero: bool = False) -> Fraction:
        """num/den with num in [num_lo, num_hi] (optionally nonzero) and den in [1, den_hi]."""
        while True:
            num = self.randint(num_lo, num_hi)
            if num or not nonzero:
                return Fraction(num, self.randint(1, den_hi))

    def split(self, key: int) -> "SplitMix64":
        return SplitMix64(derive(self.state, key))

"""Seeded 64-bit linear congruential generator.

Deterministic and portable across languages: state' = state * 6364136223846793005
+ 1442695040888963407 (mod 2^64); outputs take the top bits.
"""

MULT = 6364136223846793005
INC = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u32(self) -> int:
        self.state = (self.state * MULT + INC) & MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]."""
        return lo + self.next_u32() % (hi - lo + 1)

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randint(0, i)
            xs[i], xs[j] = xs[j], xs[i]

    def sample(self, xs, k: int) -> list:
        pool = list(xs)
        self.shuffle(pool)
        return pool[:k]

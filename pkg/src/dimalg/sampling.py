"""Random probe helpers used by the property suites.

Everything draws from small exact rationals / integers so equality checks
stay bit-exact and witnesses stay readable.
"""

import random
from fractions import Fraction


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 9) -> Fraction:
    while True:
        f = rand_fraction(rng, lo, hi, max_den)
        if f != 0:
            return f


def rand_int_vector(rng: random.Random, k: int, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(rng.randint(lo, hi) for _ in range(k))

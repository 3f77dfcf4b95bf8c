"""Independent brute-force oracles for the test suite.

Nothing here imports the package under test: sums are term-by-term stdlib
Fraction arithmetic, primality is trial division, inverses are linear scans.
Slow on purpose.
"""

from fractions import Fraction

import numpy as np


def harmonic_bruteforce(n: int) -> Fraction:
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


def alternating_bruteforce(n: int) -> Fraction:
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction((-1) ** (i - 1), i)
    return total


def range_sum_bruteforce(lo: int, hi: int) -> Fraction:
    total = Fraction(0)
    for k in range(lo, hi + 1):
        total += Fraction(1, k)
    return total


def trial_is_prime(x: int) -> bool:
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True


def next_prime_trial(x: int) -> int:
    while not trial_is_prime(x):
        x += 1
    return x


def trial_division_mask(limit: int) -> np.ndarray:
    """Boolean primality mask for 0..limit by vectorized trial division."""
    xs = np.arange(limit + 1, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    d = 2
    while d * d <= limit:
        mask &= ~((xs % d == 0) & (xs != d))
        d += 1
    return mask


def primes_upto_trial(limit: int) -> list:
    return np.flatnonzero(trial_division_mask(limit)).tolist()


def inverse_bruteforce(a: int, p: int) -> int:
    for x in range(1, p):
        if a * x % p == 1:
            return x
    raise AssertionError(f"{a} has no inverse mod {p}")

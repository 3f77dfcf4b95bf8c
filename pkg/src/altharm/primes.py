"""Deterministic 64-bit primality testing and segmented prime sieving."""

import math
from dataclasses import dataclass
from typing import Iterator, List

import numpy as np

__all__ = [
    "DEFAULT_SEGMENT_BUDGET",
    "PrimeRange",
    "is_prime",
    "odd_primes_iter",
    "sieve_range",
]

# Candidates per sieve segment; keeps the working bitmap cache-resident.
DEFAULT_SEGMENT_BUDGET = 1 << 20

_U64_MAX = (1 << 64) - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Fixed strong-pseudoprime witness schedules, each exact below its bound:
# (2, 3, 5, 7) below 3_215_031_751, and the seven-base set for everything
# else under 2^64.  Deterministic by construction; no random bases.
_WITNESSES_SMALL = (2, 3, 5, 7)
_WITNESSES_SMALL_BOUND = 3_215_031_751
_WITNESSES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def is_prime(x: int) -> bool:
    """Deterministically decide primality of x for 0 <= x < 2^64."""
    if x < 0 or x > _U64_MAX:
        raise ValueError(f"is_prime is defined on the 64-bit range, got {x}")
    if x < 41:
        return x in _SMALL_PRIMES
    for p in _SMALL_PRIMES:
        if x % p == 0:
            return False
    d = x - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    witnesses = _WITNESSES_SMALL if x < _WITNESSES_SMALL_BOUND else _WITNESSES_64
    for a in witnesses:
        v = pow(a, d, x)
        if v == 1 or v == x - 1:
            continue
        for _ in range(s - 1):
            v = v * v % x
            if v == x - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeRange:
    """Inclusive integer interval [lo, hi] to be sieved."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError(f"range bounds must be nonnegative, got lo={self.lo}")
        if self.lo > self.hi:
            raise ValueError(f"empty range: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


def _base_primes(limit: int) -> List[int]:
    """Primes <= limit by a plain boolean sieve."""
    if limit < 2:
        return []
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).tolist()


def sieve_range(r: PrimeRange, segment_budget: int = DEFAULT_SEGMENT_BUDGET) -> List[int]:
    """Exactly the primes in [r.lo, r.hi], ascending.

    The width of the range may not exceed segment_budget; callers with a
    wider interval must split it (or use odd_primes_iter, which does).
    """
    if r.width > segment_budget:
        raise ValueError(
            f"segment budget exceeded: width {r.width} > {segment_budget}; split the range"
        )
    if r.hi < 2:
        return []
    out: List[int] = []
    if r.lo <= 2 <= r.hi:
        out.append(2)
    first = max(r.lo, 3) | 1  # first odd candidate
    if first > r.hi:
        return out
    count = (r.hi - first) // 2 + 1
    mask = np.ones(count, dtype=bool)
    for p in _base_primes(math.isqrt(r.hi)):
        if p == 2:
            continue
        start = max(p * p, (first + p - 1) // p * p)
        if start % 2 == 0:
            start += p
        if start > r.hi:
            continue
        mask[(start - first) // 2 :: p] = False
    out.extend((first + 2 * np.flatnonzero(mask)).tolist())
    return out


def odd_primes_iter(
    pmin: int, pmax: int, segment_budget: int = DEFAULT_SEGMENT_BUDGET
) -> Iterator[int]:
    """Yield each odd prime in [pmin, pmax] exactly once, ascending.

    2 is never yielded.  Sieving proceeds in segments of at most
    segment_budget candidates, so arbitrarily wide ranges are fine.
    """
    if pmin > pmax:
        raise ValueError(f"pmin={pmin} > pmax={pmax}")
    lo = max(pmin, 3)
    while lo <= pmax:
        hi = min(lo + segment_budget - 1, pmax)
        yield from sieve_range(PrimeRange(lo, hi), segment_budget)
        lo = hi + 1

"""Exact rational arithmetic for harmonic and alternating harmonic sums.

Values are stdlib fractions.Fraction instances, which already carry the
reduced-form invariants this package relies on: gcd(|num|, den) = 1,
den >= 1, sign on the numerator, zero as 0/1.  The summation routines here
are the slow, trusted oracle for everything the modular fast paths claim.

Two summation orders are provided on purpose.  The default is
divide-and-conquer (binary splitting), which keeps intermediate operands
near their reduced size; harmonic_stream/alternating_stream accumulate
left to right with plain Fraction arithmetic and exist as an independent
cross-check path.
"""

from fractions import Fraction
from math import gcd
from typing import Iterator, Tuple

from .modfield import PrimeModulus, Residue

__all__ = [
    "BigRational",
    "NotPAdicIntegerError",
    "alternating_exact",
    "alternating_stream",
    "format_fraction",
    "harmonic_exact",
    "harmonic_stream",
    "make_reduced",
    "residue_of",
    "tail_exact",
]

BigRational = Fraction


class NotPAdicIntegerError(ValueError):
    """Raised when mapping a/b into Z/pZ with p dividing b."""


def make_reduced(num: int, den: int) -> Fraction:
    """num/den in lowest terms with a positive denominator.

    den = 0 raises ZeroDivisionError; (0, anything) normalizes to 0/1.
    """
    return Fraction(num, den)


def _merge(n1: int, d1: int, n2: int, d2: int) -> Tuple[int, int]:
    # Add two reduced fractions; any common factor of the raw numerator and
    # the lcm denominator divides g = gcd(d1, d2), so one small gcd finishes
    # the reduction (Knuth, TAOCP 4.5.1).
    g = gcd(d1, d2)
    if g == 1:
        return n1 * d2 + n2 * d1, d1 * d2
    d1g = d1 // g
    t = n1 * (d2 // g) + n2 * d1g
    g2 = gcd(t, g)
    if g2 == 1:
        return t, d1g * d2
    return t // g2, d1g * (d2 // g2)


def _harmonic_pair(lo: int, hi: int) -> Tuple[int, int]:
    """Sum of 1/k for k in lo..hi as a reduced (num, den) pair."""
    if lo == hi:
        return 1, lo
    if hi - lo == 1:
        # consecutive denominators are coprime, and so is their sum with each
        return lo + hi, lo * hi
    mid = (lo + hi) // 2
    n1, d1 = _harmonic_pair(lo, mid)
    n2, d2 = _harmonic_pair(mid + 1, hi)
    return _merge(n1, d1, n2, d2)


def _alternating_pair(lo: int, hi: int) -> Tuple[int, int]:
    """Sum of (-1)^(k-1)/k for k in lo..hi as a reduced (num, den) pair."""
    if lo == hi:
        return (1, lo) if lo % 2 else (-1, lo)
    if hi - lo == 1:
        # 1/lo - 1/(lo+1) = 1/(lo(lo+1)), sign by the parity of lo
        return (1, lo * hi) if lo % 2 else (-1, lo * hi)
    mid = (lo + hi) // 2
    n1, d1 = _alternating_pair(lo, mid)
    n2, d2 = _alternating_pair(mid + 1, hi)
    return _merge(n1, d1, n2, d2)


def harmonic_exact(n: int) -> Fraction:
    """The harmonic sum 1 + 1/2 + ... + 1/n, reduced; n = 0 gives 0/1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return Fraction(0)
    return Fraction(*_harmonic_pair(1, n))


def alternating_exact(n: int) -> Fraction:
    """The alternating sum 1 - 1/2 + 1/3 - ... + (-1)^(n-1)/n, reduced."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return Fraction(0)
    return Fraction(*_alternating_pair(1, n))


def tail_exact(lo: int, hi: int) -> Fraction:
    """Sum of 1/k for k in lo..hi, reduced.

    With lo = floor(n/2)+1 and hi = n this is the tail form of the
    alternating sum A_n.
    """
    if lo < 1:
        raise ValueError(f"lo must be positive, got {lo}")
    if lo > hi:
        raise ValueError(f"empty tail: lo={lo} > hi={hi}")
    return Fraction(*_harmonic_pair(lo, hi))


def harmonic_stream(nmax: int) -> Iterator[Fraction]:
    """Yield H_1, H_2, ..., H_nmax by left-to-right accumulation.

    Plain Fraction arithmetic only; kept independent of the
    divide-and-conquer path so the two can cross-check each other.
    """
    total = Fraction(0)
    for k in range(1, nmax + 1):
        total += Fraction(1, k)
        yield total


def alternating_stream(nmax: int) -> Iterator[Fraction]:
    """Yield A_1, A_2, ..., A_nmax by left-to-right accumulation."""
    total = Fraction(0)
    for k in range(1, nmax + 1):
        total += Fraction(1, k) if k % 2 else Fraction(-1, k)
        yield total


def residue_of(x: Fraction, p: PrimeModulus) -> Residue:
    """Map a/b to a * b^(-1) in Z/pZ.

    Defined only when p does not divide b (i.e. x is a p-adic integer).
    """
    q = p.p
    if x.denominator % q == 0:
        raise NotPAdicIntegerError(
            f"{format_fraction(x)} is not a p-adic integer for p={q}"
        )
    return Residue(x.numerator * pow(x.denominator, -1, q) % q, p)


def format_fraction(x: Fraction) -> str:
    """Serialize as "numerator/denominator" in base 10, slash always present."""
    return f"{x.numerator}/{x.denominator}"

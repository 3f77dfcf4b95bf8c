"""Arithmetic in Z/pZ for odd primes p.

Covers canonical residues, single and batch modular inversion, the fast
tail-sum evaluation of the alternating harmonic sum A_n modulo p, and the
pairing check that shows term-by-term why that sum cancels.  Everything is
exact integer arithmetic; the numpy kernel is a fixed-width fast path that
is bit-identical to the pure-Python one.
"""

import enum
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from .primes import is_prime

__all__ = [
    "FormCase",
    "NotUnitError",
    "PrimeModulus",
    "Residue",
    "alternating_mod",
    "batch_inverse",
    "mod_inverse",
    "pairing_defect",
]


class NotUnitError(ValueError):
    """Raised when inverting something that is 0 mod p."""


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime modulus in the 64-bit range (primality checked on construction)."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 3:
            raise ValueError(f"modulus must be an odd prime >= 3, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")

    def residue(self, value: int) -> "Residue":
        """Canonical representative of value mod p."""
        return Residue(value % self.p, self)


@dataclass(frozen=True)
class Residue:
    """An element of Z/pZ stored as its canonical representative in [0, p)."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(
                f"residue {self.value} outside [0, {self.modulus.p})"
            )

    def __int__(self) -> int:
        return self.value


class FormCase(enum.Enum):
    """Which witness construction applies.

    ODD pairs an odd index n with p = (3n+1)/2; EVEN pairs an even index n
    with p = (3n+2)/2.  The wire tags are the lowercase member values.
    """

    ODD = "odd"
    EVEN = "even"


def mod_inverse(a: Residue) -> Residue:
    """The x with a*x = 1 mod p; a must be nonzero."""
    if a.value == 0:
        raise NotUnitError(f"0 is not a unit mod {a.modulus.p}")
    # pow(., -1, p) is the stdlib's extended-Euclid inverse
    return Residue(pow(a.value, -1, a.modulus.p), a.modulus)


def batch_inverse(values: Sequence[Residue], p: PrimeModulus) -> List[Residue]:
    """Elementwise mod_inverse using one inversion plus O(len) multiplications.

    The prefix-product trick: invert the running product once, then peel the
    factors back off.  Any zero element is rejected with its index.
    """
    ints = []
    for i, r in enumerate(values):
        if r.modulus != p:
            raise ValueError(
                f"element {i} has modulus {r.modulus.p}, expected {p.p}"
            )
        if r.value == 0:
            raise NotUnitError(f"element {i} is 0 mod {p.p}: not a unit")
        ints.append(r.value)
    return [Residue(v, p) for v in _batch_inverse_ints(ints, p.p)]


def _batch_inverse_ints(vals: Sequence[int], p: int) -> List[int]:
    n = len(vals)
    if n == 0:
        return []
    prefix = [1] * n  # prefix[i] = product of vals[:i]
    acc = 1
    for i, v in enumerate(vals):
        prefix[i] = acc
        acc = acc * v % p
    inv = pow(acc, -1, p)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = prefix[i] * inv % p
        inv = inv * vals[i] % p
    return out


# Largest modulus for which two residues multiply without overflowing int64.
_NUMPY_MAX_P = 3_037_000_499
_SCAN_BLOCK = 64


def _prefix_products_np(v: np.ndarray, p: int):
    """Inclusive prefix products of v mod p; returns (prefix, total product).

    Blocked scan: sequential only along a 64-wide block axis, vectorized
    across blocks, then stitched with per-block offsets.
    """
    m = v.size
    blocks = -(-m // _SCAN_BLOCK)
    a = np.ones(blocks * _SCAN_BLOCK, dtype=np.int64)
    a[:m] = v
    a = a.reshape(blocks, _SCAN_BLOCK)
    for j in range(1, _SCAN_BLOCK):
        a[:, j] = a[:, j] * a[:, j - 1] % p
    offsets = np.ones(blocks, dtype=np.int64)
    acc = 1
    for i, t in enumerate(a[:, -1].tolist()):
        offsets[i] = acc
        acc = acc * t % p
    a = a * offsets[:, None] % p
    return a.reshape(-1)[:m], acc


def _batch_inverse_array(v: np.ndarray, p: int) -> np.ndarray:
    """Vectorized batch inversion of nonzero residues; needs p <= _NUMPY_MAX_P."""
    m = v.size
    if m == 0:
        return v.copy()
    pre, total = _prefix_products_np(v, p)
    suf, _ = _prefix_products_np(v[::-1], p)
    suf = suf[::-1]
    excl_pre = np.empty(m, dtype=np.int64)
    excl_pre[0] = 1
    excl_pre[1:] = pre[:-1]
    excl_suf = np.empty(m, dtype=np.int64)
    excl_suf[-1] = 1
    excl_suf[:-1] = suf[1:]
    tinv = pow(int(total), -1, p)
    return excl_pre * excl_suf % p * tinv % p


def _inverse_range(lo: int, hi: int, p: int) -> Union[np.ndarray, List[int]]:
    """Inverses of lo..hi mod p; requires 0 < lo and hi < p."""
    if p <= _NUMPY_MAX_P:
        return _batch_inverse_array(np.arange(lo, hi + 1, dtype=np.int64), p)
    return _batch_inverse_ints(list(range(lo, hi + 1)), p)


def _sum_mod(invs, p: int) -> int:
    if isinstance(invs, np.ndarray):
        # chunks keep partial sums inside int64
        chunk = max(1, (1 << 62) // p)
        total = 0
        for i in range(0, invs.size, chunk):
            total = (total + int(invs[i : i + chunk].sum())) % p
        return total
    return sum(invs) % p


def alternating_mod(n: int, p: PrimeModulus) -> Residue:
    """Residue of the alternating harmonic sum A_n modulo p, for p > n.

    Evaluates the tail form A_n = 1/(floor(n/2)+1) + ... + 1/n with one batch
    inversion over the tail range; p > n makes every term a unit.  Refuses
    p <= n, where 1/p has no meaning mod p.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if p.p <= n:
        raise ValueError(
            f"modulus inside summation range: p={p.p} <= n={n} (need p > n)"
        )
    invs = _inverse_range(n // 2 + 1, n, p.p)
    return Residue(_sum_mod(invs, p.p), p)


def pairing_defect(n: int, p: PrimeModulus, case: FormCase) -> List[Residue]:
    """Per-pair residues inv(lo+k-1) + inv(hi-k+1) mod p over the tail of A_n.

    With lo = floor(n/2)+1 and hi = n, the case linkage makes each pair of
    arguments sum to exactly p, so every returned residue should be zero;
    the tail length is even, so the pairing covers all summands.
    """
    _check_case_linkage(n, p.p, case)
    lo = n // 2 + 1
    count = n - lo + 1
    # the linkage plus p odd forces an even number of tail summands
    assert count % 2 == 0, f"odd tail length {count} under case {case}"
    invs = _inverse_range(lo, n, p.p)
    q = p.p
    return [
        Residue(int(invs[k] + invs[count - 1 - k]) % q, p)
        for k in range(count // 2)
    ]


def _check_case_linkage(n: int, p: int, case: FormCase) -> None:
    if case is FormCase.ODD:
        if n < 1 or n % 2 == 0 or 3 * n + 1 != 2 * p:
            raise ValueError(
                f"odd case needs odd n with p=(3n+1)/2; got n={n}, p={p}"
            )
    elif case is FormCase.EVEN:
        if n < 1 or n % 2 == 1 or 3 * n + 2 != 2 * p:
            raise ValueError(
                f"even case needs even n with p=(3n+2)/2; got n={n}, p={p}"
            )
    else:
        raise ValueError(f"unknown case {case!r}")

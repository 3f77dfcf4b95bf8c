"""The witness construction as executable maps, plus verification drivers.

For an odd prime p >= 5, 2p-1 is 0 or 1 mod 3 (2 mod 3 would force 3 | p),
which yields an index n with p = (3n+1)/2 (odd n) or p = (3n+2)/2 (even n).
For that n the numerator of the alternating harmonic sum A_n is divisible
by p; verify_prime/verify_range check this for real, modularly and (below a
threshold) against the exact rational oracle.  p = 3 is the one odd prime
the construction misses, so search_numerator_divisor provides an empirical
probe instead of a claim.
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .modfield import FormCase, PrimeModulus, _inverse_range, alternating_mod
from .primes import is_prime, odd_primes_iter
from .rationals import _merge, alternating_exact, residue_of

__all__ = [
    "CSV_HEADER",
    "ConsistencyError",
    "DEFAULT_EXACT_THRESHOLD",
    "DEFAULT_SEARCH_BUDGET",
    "FormCase",
    "ProofInapplicableError",
    "RangeSummary",
    "WitnessRecord",
    "classify_index",
    "record_to_csv",
    "record_to_json",
    "search_numerator_divisor",
    "verify_prime",
    "verify_range",
    "witness_index",
]

# Exact cross-checks cover every witness index up to here by default, i.e.
# all p <= 3001, without dominating the runtime of large range runs.
DEFAULT_EXACT_THRESHOLD = 2000

DEFAULT_SEARCH_BUDGET = 100_000

_SHARD_WIDTH = 8192


class ProofInapplicableError(ValueError):
    """The witness construction does not cover this prime (p = 2 or 3)."""


class ConsistencyError(RuntimeError):
    """Exact and modular evaluations disagree: an implementation bug, not math."""


def witness_index(p: int) -> Tuple[int, FormCase]:
    """The constructive witness index n for an odd prime p >= 5.

    2p-1 = 3n gives the odd case with p = (3n+1)/2; 2p-1 = 3n+1 gives the
    even case with p = (3n+2)/2.  For p in {2, 3} neither holds and a
    dedicated ProofInapplicableError is raised.
    """
    if p in (2, 3):
        raise ProofInapplicableError(
            f"proof construction inapplicable for p={p}: 2p-1 = {2 * p - 1} "
            f"is {(2 * p - 1) % 3} mod 3"
        )
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if (2 * p - 1) % 3 == 0:
        return (2 * p - 1) // 3, FormCase.ODD
    # 2p-1 = 2 mod 3 would force 3 | p, impossible here
    return (2 * p - 2) // 3, FormCase.EVEN


def classify_index(n: int) -> Optional[Tuple[int, FormCase]]:
    """Candidate prime for index n, or None.

    Odd n proposes p = (3n+1)/2, even n proposes p = (3n+2)/2; the pair is
    returned only when the candidate is a prime >= 5, and then
    witness_index(p) round-trips back to (n, case).
    """
    if n < 1:
        return None
    if n % 2:
        cand, case = (3 * n + 1) // 2, FormCase.ODD
    else:
        cand, case = (3 * n + 2) // 2, FormCase.EVEN
    if cand < 5 or not is_prime(cand):
        return None
    return cand, case


@dataclass(frozen=True)
class WitnessRecord:
    """One verified (p, n) instance: residue of A_n mod p and how it was checked."""

    p: int
    n: int
    case: FormCase
    residue: int
    exact_checked: bool
    ok: bool


CSV_HEADER = "p,n,case,residue,exact_checked,ok"


def record_to_json(rec: WitnessRecord) -> str:
    """One-line JSON with fixed field order and lowercase case tags."""
    return json.dumps(
        {
            "p": rec.p,
            "n": rec.n,
            "case": rec.case.value,
            "residue": rec.residue,
            "exact_checked": rec.exact_checked,
            "ok": rec.ok,
        },
        separators=(",", ":"),
    )


def record_to_csv(rec: WitnessRecord) -> str:
    return (
        f"{rec.p},{rec.n},{rec.case.value},{rec.residue},"
        f"{str(rec.exact_checked).lower()},{str(rec.ok).lower()}"
    )


def verify_prime(p: int, exact_threshold: int = DEFAULT_EXACT_THRESHOLD) -> WitnessRecord:
    """Check A_n = 0 mod p for the constructive witness n of p.

    The residue comes from the modular tail evaluation; when
    n <= exact_threshold it must also agree with the exact rational oracle,
    and any disagreement aborts with ConsistencyError.  ok=False is a
    counterexample report, never an exception.
    """
    n, case = witness_index(p)
    # these congruences are forced by the linkage; breaking one is a bug
    if case is FormCase.ODD and n % 4 != 3:
        raise ConsistencyError(f"odd witness n={n} for p={p} is not 3 mod 4")
    if case is FormCase.EVEN and n % 4 != 0:
        raise ConsistencyError(f"even witness n={n} for p={p} is not 0 mod 4")
    pm = PrimeModulus(p)
    residue = alternating_mod(n, pm).value
    exact_checked = n <= exact_threshold
    if exact_checked:
        exact = residue_of(alternating_exact(n), pm).value
        if exact != residue:
            raise ConsistencyError(
                f"exact/modular mismatch at p={p}, n={n}: {exact} != {residue}"
            )
    return WitnessRecord(
        p=p, n=n, case=case, residue=residue, exact_checked=exact_checked,
        ok=(residue == 0),
    )


@dataclass
class RangeSummary:
    """Aggregate outcome of verifying the odd primes in [pmin, pmax]."""

    pmin: int
    pmax: int
    verified_count: int = 0
    failure_count: int = 0
    skipped: List[Tuple[int, str]] = field(default_factory=list)
    elapsed: float = 0.0


def _verify_shard(args: Tuple[int, int, int]) -> Tuple[List[WitnessRecord], float]:
    lo, hi, exact_threshold = args
    t0 = time.perf_counter()
    recs = [verify_prime(p, exact_threshold) for p in odd_primes_iter(lo, hi)]
    return recs, time.perf_counter() - t0


def verify_range(
    pmin: int,
    pmax: int,
    *,
    jobs: int = 1,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    record_sink: Optional[Callable[[WitnessRecord], None]] = None,
    progress: Optional[Callable[[int, int, int, float], None]] = None,
) -> RangeSummary:
    """Verify every odd prime p >= 5 in [pmin, pmax].

    Records stream to record_sink in ascending p, independent of jobs: the
    range is cut into fixed shards, worked in parallel for jobs > 1, and
    merged back in order.  p = 3 inside the range is recorded as skipped.
    A failing record (ok=False) is counted, not raised.  progress, if given,
    is called per completed shard with (lo, hi, record_count, seconds).
    """
    if pmin > pmax:
        raise ValueError(f"pmin={pmin} > pmax={pmax}")
    start = time.perf_counter()
    summary = RangeSummary(pmin=pmin, pmax=pmax)
    if pmin <= 3 <= pmax:
        summary.skipped.append((3, "proof inapplicable"))

    shard_args = [
        (lo, min(lo + _SHARD_WIDTH - 1, pmax), exact_threshold)
        for lo in range(max(pmin, 5), pmax + 1, _SHARD_WIDTH)
    ]

    def consume(args, recs: List[WitnessRecord], shard_seconds: float) -> None:
        for rec in recs:
            if rec.ok:
                summary.verified_count += 1
            else:
                summary.failure_count += 1
            if record_sink is not None:
                record_sink(rec)
        if progress is not None:
            progress(args[0], args[1], len(recs), shard_seconds)

    if jobs <= 1 or len(shard_args) <= 1:
        for args in shard_args:
            recs, dt = _verify_shard(args)
            consume(args, recs, dt)
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(shard_args))) as pool:
            for args, (recs, dt) in zip(shard_args, pool.map(_verify_shard, shard_args)):
                consume(args, recs, dt)

    summary.elapsed = time.perf_counter() - start
    return summary


def search_numerator_divisor(
    p: int, nmax: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> List[int]:
    """Every n <= nmax with p dividing the reduced numerator of A_n.

    For n < p all denominators are units mod p, so an incremental modular
    scan of the running sum suffices; from n = p on, 1/p has no residue and
    the scan switches to the exact oracle with a divisibility test on the
    reduced numerator.  Purely empirical: an empty result asserts nothing.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if nmax < 1:
        raise ValueError(f"nmax must be positive, got {nmax}")
    if nmax > budget:
        raise ValueError(f"nmax={nmax} exceeds the search budget {budget}")

    hits: List[int] = []
    m = min(nmax, p - 1)
    invs = _inverse_range(1, m, p)
    s = 0
    for i in range(m):
        v = int(invs[i])
        s = (s + v) % p if i % 2 == 0 else (s - v) % p
        if s == 0:
            hits.append(i + 1)

    if nmax >= p:
        a = alternating_exact(p - 1)
        num, den = a.numerator, a.denominator
        for k in range(p, nmax + 1):
            num, den = _merge(num, den, 1 if k % 2 else -1, k)
            if num % p == 0:
                hits.append(k)
    return hits

import random

import numpy as np
import pytest

import oracles
from altharm.modfield import (
    FormCase,
    NotUnitError,
    PrimeModulus,
    Residue,
    _batch_inverse_array,
    _batch_inverse_ints,
    _NUMPY_MAX_P,
    alternating_mod,
    batch_inverse,
    mod_inverse,
    pairing_defect,
)
from altharm.rationals import alternating_exact, residue_of
from altharm.primes import is_prime


def test_prime_modulus_validation():
    assert PrimeModulus(3).p == 3
    assert PrimeModulus(2**31 - 1).p == 2**31 - 1
    for bad in (0, 1, 2, 4, 9, 561):
        with pytest.raises(ValueError):
            PrimeModulus(bad)


def test_residue_validation_and_canonicalization():
    pm = PrimeModulus(7)
    assert pm.residue(-1).value == 6
    assert pm.residue(15).value == 1
    assert int(pm.residue(3)) == 3
    with pytest.raises(ValueError):
        Residue(7, pm)
    with pytest.raises(ValueError):
        Residue(-1, pm)


def test_mod_inverse_examples():
    pm = PrimeModulus(11)
    assert mod_inverse(Residue(1, pm)).value == 1
    assert mod_inverse(Residue(2, pm)).value == 6
    with pytest.raises(NotUnitError):
        mod_inverse(Residue(0, PrimeModulus(7)))


@pytest.mark.parametrize("p", [3, 5, 11, 101])
def test_mod_inverse_against_bruteforce(p):
    pm = PrimeModulus(p)
    for a in range(1, p):
        assert mod_inverse(Residue(a, pm)).value == oracles.inverse_bruteforce(a, p)


def test_mod_inverse_property_large_modulus():
    p = 2**61 - 1
    pm = PrimeModulus(p)
    rng = random.Random(99)
    for _ in range(50):
        a = rng.randrange(1, p)
        assert a * mod_inverse(Residue(a, pm)).value % p == 1


def test_batch_inverse_examples():
    pm7 = PrimeModulus(7)
    assert [r.value for r in batch_inverse([Residue(1, pm7)], pm7)] == [1]
    vals = [Residue(v, pm7) for v in (1, 2, 3)]
    assert [r.value for r in batch_inverse(vals, pm7)] == [1, 4, 5]


def test_batch_inverse_zero_element_reports_index():
    pm7 = PrimeModulus(7)
    vals = [Residue(3, pm7), Residue(0, pm7), Residue(5, pm7)]
    with pytest.raises(NotUnitError, match="element 1"):
        batch_inverse(vals, pm7)


def test_batch_inverse_rejects_foreign_modulus():
    pm7, pm11 = PrimeModulus(7), PrimeModulus(11)
    with pytest.raises(ValueError, match="element 0"):
        batch_inverse([Residue(3, pm11)], pm7)


def test_batch_inverse_matches_single_inversions():
    rng = random.Random(42)
    for p in (5, 13, 997, 2**31 - 1):
        pm = PrimeModulus(p)
        vals = [Residue(rng.randrange(1, p), pm) for _ in range(257)]
        got = batch_inverse(vals, pm)
        for v, g in zip(vals, got):
            assert g.value == mod_inverse(v).value
        assert batch_inverse([], pm) == []


def test_numpy_kernel_matches_pure_python():
    rng = random.Random(5)
    for p in (5, 97, 65537, 2**31 - 1, 3_037_000_493):
        for size in (1, 2, 63, 64, 65, 1000):
            ints = [rng.randrange(1, p) for _ in range(size)]
            arr = _batch_inverse_array(np.array(ints, dtype=np.int64), p)
            assert arr.tolist() == _batch_inverse_ints(ints, p)


def test_kernel_paths_agree_across_the_width_boundary():
    # same range inverted with the int64 kernel and the big-int fallback
    below = 3_037_000_493  # largest prime <= _NUMPY_MAX_P
    above = 3_037_000_507  # smallest prime > _NUMPY_MAX_P
    assert is_prime(below) and below <= _NUMPY_MAX_P
    assert is_prime(above) and above > _NUMPY_MAX_P
    ints = list(range(10**6, 10**6 + 500))
    got_np = _batch_inverse_array(np.array(ints, dtype=np.int64), below)
    assert got_np.tolist() == _batch_inverse_ints(ints, below)
    for p in (below, above):
        out = _batch_inverse_ints(ints, p)
        assert all(v * o % p == 1 for v, o in zip(ints, out))


@pytest.mark.parametrize("n,p,want", [(7, 11, 0), (4, 7, 0), (2, 5, 3)])
def test_alternating_mod_examples(n, p, want):
    assert alternating_mod(n, PrimeModulus(p)).value == want


def test_alternating_mod_rejects_modulus_in_range():
    with pytest.raises(ValueError, match="summation range"):
        alternating_mod(7, PrimeModulus(7))
    with pytest.raises(ValueError, match="summation range"):
        alternating_mod(11, PrimeModulus(5))
    with pytest.raises(ValueError):
        alternating_mod(0, PrimeModulus(5))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101, 1009])
def test_alternating_mod_agrees_with_exact_oracle(p):
    pm = PrimeModulus(p)
    for n in range(1, min(p, 120)):
        assert (
            alternating_mod(n, pm).value
            == residue_of(alternating_exact(n), pm).value
        )


def test_pairing_defect_examples():
    assert [r.value for r in pairing_defect(7, PrimeModulus(11), FormCase.ODD)] == [0, 0]
    assert [r.value for r in pairing_defect(4, PrimeModulus(7), FormCase.EVEN)] == [0]
    assert [r.value for r in pairing_defect(3, PrimeModulus(5), FormCase.ODD)] == [0]


def test_pairing_defect_rejects_mismatches():
    with pytest.raises(ValueError):
        pairing_defect(7, PrimeModulus(11), FormCase.EVEN)
    with pytest.raises(ValueError):
        pairing_defect(5, PrimeModulus(11), FormCase.ODD)
    with pytest.raises(ValueError):
        pairing_defect(4, PrimeModulus(11), FormCase.EVEN)


def test_pairing_defect_pairs_sum_to_modulus():
    # inv(a) + inv(b) = 0 mod p exactly because a + b = p
    for n, p, case in [(7, 11, FormCase.ODD), (8, 13, FormCase.EVEN), (3, 5, FormCase.ODD)]:
        pm = PrimeModulus(p)
        defects = pairing_defect(n, pm, case)
        lo, hi = n // 2 + 1, n
        count = hi - lo + 1
        assert count % 2 == 0
        assert len(defects) == count // 2
        for k in range(1, count // 2 + 1):
            assert (lo + k - 1) + (hi - k + 1) == p
        assert all(r.value == 0 for r in defects)
        # the paired inverses sum to the whole tail, i.e. to A_n mod p
        assert sum(r.value for r in defects) % p == alternating_mod(n, pm).value == 0

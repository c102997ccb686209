import numpy as np
import pytest
from sympy import primepi, primerange

from beattyprimes.basic.errors import InvalidParams
from beattyprimes.primes.sieve import (SieveSegment, iter_prime_blocks, pi, primes_up_to, segment_bounds,
                                       sieve_segment, small_primes, trial_division_primes)


def test_small_cases():
    assert list(primes_up_to(10)) == [2, 3, 5, 7]
    assert list(primes_up_to(1)) == []
    assert list(primes_up_to(2)) == [2]
    assert len(list(primes_up_to(100))) == 25


def test_pi_values():
    assert pi(0) == 0
    assert pi(1) == 0
    assert pi(100) == 25
    assert pi(10 ** 6) == 78498


def test_matches_trial_division():
    assert list(primes_up_to(10 ** 5)) == trial_division_primes(10 ** 5)


@pytest.mark.parametrize("segment_size", [1, 7, 64, 1000, 1 << 20])
def test_segment_size_independent(segment_size):
    expected = list(primerange(2, 20001))
    assert list(primes_up_to(20000, segment_size=segment_size)) == expected


def test_blocks_are_ascending_int64():
    blocks = list(iter_prime_blocks(5000, segment_size=100))
    assert all(b.dtype == np.int64 for b in blocks)
    flat = np.concatenate(blocks)
    assert np.all(np.diff(flat) > 0)
    assert len(flat) == primepi(5000)


def test_segment_bounds_tile_even():
    bounds = list(segment_bounds(1001, segment_size=100))
    assert bounds[0][0] == 0
    assert all(lo % 2 == 0 and hi % 2 == 0 for lo, hi in bounds)
    assert all(a[1] == b[0] for a, b in zip(bounds, bounds[1:]))
    assert bounds[-1][1] >= 1002


def test_segment_slots_mark_composites():
    segment = sieve_segment(100, 140, small_primes(12))
    assert segment.slots == 20
    # slot i stands for 100 + 2i + 1
    assert not segment.bits[0]      # 101
    assert segment.bits[2]          # 105
    assert segment.primes().tolist() == [101, 103, 107, 109, 113, 127, 131, 137, 139]


def test_one_is_not_prime():
    segment = sieve_segment(0, 20, small_primes(5))
    assert segment.bits[0]
    assert segment.primes().tolist() == [3, 5, 7, 11, 13, 17, 19]


def test_packed_round_trip_keeps_flags():
    segment = sieve_segment(1000, 1130, small_primes(40))
    restored = SieveSegment.from_packed(1000, 1130, segment.packed())
    assert np.array_equal(restored.bits, segment.bits)


def test_segment_rejects_odd_bounds():
    with pytest.raises(InvalidParams):
        SieveSegment(lo=1, hi=11, bits=np.zeros(5, dtype=bool))

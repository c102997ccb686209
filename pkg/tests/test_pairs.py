import math

import pytest
from sympy import nextprime, primerange

from beattyprimes.primes.pairs import GapHistogram, PrimePair, consecutive_pairs, gap_histogram, pair_blocks
from beattyprimes.primes.sieve import pi


def brute_pairs(x):
    return [(p, nextprime(p)) for p in primerange(2, x + 1)]


def test_small_pairs():
    assert list(consecutive_pairs(10)) == [PrimePair(2, 3, 1), PrimePair(3, 5, 2),
                                           PrimePair(5, 7, 2), PrimePair(7, 11, 4)]


def test_last_pair_runs_past_x():
    assert list(consecutive_pairs(30))[-1] == PrimePair(29, 31, 2)
    assert list(consecutive_pairs(31))[-1] == PrimePair(31, 37, 6)


def test_pairs_match_nextprime():
    got = [(pair.p, pair.p_sharp) for pair in consecutive_pairs(5000, segment_size=50)]
    assert got == brute_pairs(5000)


def test_histogram_small_counts():
    histogram = gap_histogram(100)
    assert histogram.counts[2] == 8
    assert histogram.counts[4] == 7
    assert gap_histogram(10).counts[1] == 1


def test_histogram_partitions_pi():
    x = 10 ** 5
    histogram = gap_histogram(x)
    assert histogram.total() == pi(x)
    assert histogram.even_total() == pi(x) - 1
    assert all(h % 2 == 0 for h in histogram.counts if h != 1)


@pytest.mark.parametrize("segment_size", [13, 1000, 1 << 16])
def test_histogram_independent_of_segment_size(segment_size):
    assert gap_histogram(50000, segment_size=segment_size).counts == gap_histogram(50000).counts


def test_tail_mass_negligible():
    x = 10 ** 6
    histogram = gap_histogram(x)
    assert histogram.tail(math.log(x) ** 3) / pi(x) < 0.01


def test_known_sieve_counts_at_one_million():
    counts = gap_histogram(10 ** 6).counts
    assert counts[2] == 8169
    assert counts[4] == 8143
    assert counts[6] == 13549


def test_merge_adds_counts():
    merged = GapHistogram(10, {1: 1, 2: 2}).merge(GapHistogram(20, {2: 1, 4: 1}))
    assert merged.x == 20
    assert merged.counts == {1: 1, 2: 3, 4: 1}
    assert merged.rows() == [(1, 1), (2, 3), (4, 1)]


def test_pair_blocks_empty_below_two():
    assert list(pair_blocks(1)) == []

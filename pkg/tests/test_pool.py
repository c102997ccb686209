import numpy as np

from beattyprimes.pool.segment_manager import SegmentManager
from beattyprimes.pool.segment_runner import summarize_segment
from beattyprimes.primes.pairs import gap_histogram
from beattyprimes.primes.sieve import pi, small_primes
from beattyprimes.workload.tasks.runner_type import RunnerType


def test_summary_keeps_only_pairs_at_or_below_x():
    summary = summarize_segment(0, 100, 140, 110, small_primes(12), RunnerType.GAP_HISTOGRAM)
    # 101->103, 103->107, 107->109, 109->113
    assert summary.gaps == {2: 2, 4: 2}
    assert (summary.first, summary.last) == (101, 139)
    assert summary.count == 4


def test_prime_count_summary_has_no_gaps():
    summary = summarize_segment(3, 100, 140, 1000, small_primes(12), RunnerType.PRIME_COUNT)
    assert summary.gaps == {}
    assert summary.count == 9


def test_empty_segment():
    summary = summarize_segment(0, 114, 126, 200, small_primes(12), RunnerType.GAP_HISTOGRAM)
    assert summary.empty


def test_pool_histogram_matches_serial():
    x = 50000
    pooled = SegmentManager(segment_size=1 << 14).gap_histogram(x, num_workers=2)
    assert pooled.counts == gap_histogram(x).counts


def test_pool_prime_count():
    assert SegmentManager(segment_size=1 << 14).prime_count(10 ** 5, num_workers=2) == 9592
    assert pi(10 ** 5, workers=2, segment_size=1 << 14) == 9592


def test_histogram_workers_argument_routes_to_pool():
    assert gap_histogram(20000, segment_size=4096, workers=2).counts == gap_histogram(20000).counts

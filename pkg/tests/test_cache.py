import struct

import numpy as np

from beattyprimes.primes.cache import HEADER, MAGIC, SegmentCache
from beattyprimes.primes.pairs import gap_histogram
from beattyprimes.primes.sieve import iter_segments, primes_up_to, sieve_segment, small_primes


def test_store_then_load(tmp_path):
    cache = SegmentCache(tmp_path)
    segment = sieve_segment(2000, 2200, small_primes(50))
    path = cache.store(segment)
    with open(path, 'rb') as f:
        magic, lo, hi = HEADER.unpack(f.read(HEADER.size))
    assert (magic, lo, hi) == (MAGIC, 2000, 2200)
    loaded = cache.load(2000, 2200)
    assert np.array_equal(loaded.bits, segment.bits)
    assert cache.hits == 1


def test_missing_file_is_a_miss(tmp_path):
    cache = SegmentCache(tmp_path)
    assert cache.load(0, 100) is None
    assert cache.misses == 1


def test_foreign_header_is_recomputed(tmp_path):
    cache = SegmentCache(tmp_path)
    with open(cache.path_for(0, 100), 'wb') as f:
        f.write(struct.pack('<4sQQ', b"XXXX", 0, 100))
    assert cache.load(0, 100) is None


def test_corrupt_payload_is_swallowed(tmp_path):
    cache = SegmentCache(tmp_path)
    cache.path_for(0, 100).write_bytes(b"BS")
    assert cache.load(0, 100) is None


def test_cached_pass_matches_fresh_pass(tmp_path):
    cache = SegmentCache(tmp_path)
    fresh = gap_histogram(30000, segment_size=1000)
    first = gap_histogram(30000, segment_size=1000, cache=cache)
    stored = len(list(tmp_path.glob('*.bsv')))
    second = gap_histogram(30000, segment_size=1000, cache=cache)
    assert stored > 0
    assert cache.hits >= stored
    assert fresh.counts == first.counts == second.counts


def test_iter_segments_uses_cache(tmp_path):
    cache = SegmentCache(tmp_path)
    list(iter_segments(5000, 500, cache))
    again = [s.primes() for s in iter_segments(5000, 500, cache)]
    assert cache.hits == len(again)
    assert [2] + np.concatenate(again).tolist()[:9] == list(primes_up_to(30))

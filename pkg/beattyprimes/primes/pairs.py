"""Consecutive-prime pairs (p, p#) and gap histograms."""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from beattyprimes.basic import settings
from beattyprimes.basic.errors import SieveError
from beattyprimes.basic.util import trace
from beattyprimes.primes.sieve import iter_prime_blocks


class PrimePair(NamedTuple):
    p: int
    p_sharp: int
    gap: int


def successor_window(x: int) -> int:
    """How far past x the sieve runs to find the successor of the last prime <= x."""
    log_x = math.log(max(x, 2))
    return max(10 ** 6, 2 * math.ceil(log_x * log_x))


def pair_blocks(x: int, segment_size: Optional[int] = None, cache=None) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """(p, p#) as aligned int64 arrays for every prime p <= x, ascending in p.

    p# may exceed x: the sieve continues up to ``successor_window(x)`` past x
    and raises SieveError if the successor is still missing.
    """
    if x < 2:
        return
    limit = x + successor_window(x)
    carry = None
    for block in iter_prime_blocks(limit, segment_size, cache):
        if carry is not None:
            block = np.concatenate([np.array([carry], dtype=np.int64), block])
        carry = int(block[-1])
        if len(block) < 2:
            continue
        p, q = block[:-1], block[1:]
        keep = p <= x
        if keep.all():
            yield p, q
            continue
        if keep.any():
            yield p[keep], q[keep]
        return
    if carry is not None and carry > x:
        return
    raise SieveError(f"no prime found in ({x}, {limit}]")


def consecutive_pairs(x: int, segment_size: Optional[int] = None) -> Iterator[PrimePair]:
    for p, q in pair_blocks(x, segment_size):
        for a, b in zip(p.tolist(), q.tolist()):
            yield PrimePair(a, b, b - a)


@dataclass
class GapHistogram:
    x: int
    counts: Dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def even_total(self, h_max: Optional[float] = None) -> int:
        """Pairs with even gap (the (2,3) pair excluded), optionally capped at h_max."""
        return sum(c for h, c in self.counts.items()
                   if h % 2 == 0 and (h_max is None or h <= h_max))

    def tail(self, threshold: float) -> int:
        return sum(c for h, c in self.counts.items() if h > threshold)

    def merge(self, other: 'GapHistogram') -> 'GapHistogram':
        merged = Counter(self.counts)
        merged.update(other.counts)
        return GapHistogram(x=max(self.x, other.x), counts=dict(sorted(merged.items())))

    def rows(self) -> List[Tuple[int, int]]:
        return sorted(self.counts.items())


def count_gaps(p: np.ndarray, q: np.ndarray) -> Counter:
    gaps, counts = np.unique(q - p, return_counts=True)
    return Counter(dict(zip(gaps.tolist(), counts.tolist())))


@trace
def gap_histogram(x: int, segment_size: Optional[int] = None, workers: Optional[int] = None, cache=None) -> GapHistogram:
    """S_h(x) for every gap h: the number of primes p <= x with p# - p = h."""
    workers = int(workers or settings.workers)
    if workers > 1:
        from beattyprimes.pool.segment_manager import SegmentManager
        manager = SegmentManager(segment_size=segment_size)
        return manager.gap_histogram(x, num_workers=workers)

    counts = Counter()
    for p, q in pair_blocks(x, segment_size, cache):
        counts.update(count_gaps(p, q))
    return GapHistogram(x=x, counts=dict(sorted(counts.items())))

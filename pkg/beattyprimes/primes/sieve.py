"""Odd-only segmented sieve of Eratosthenes.

A segment covers the half-open range [lo, hi) with lo and hi even; slot i
stands for the odd number lo + 2i + 1 and is set when that number is
composite (1 counts as composite). Segment boundaries never change which
numbers are prime, so every consumer is independent of the segment size.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import takewhile
from typing import Iterator, Optional

import numpy as np

from beattyprimes.basic import settings
from beattyprimes.basic.errors import InvalidParams

DEFAULT_SEGMENT_SIZE = 1 << 20  # odd slots per segment


@lru_cache(maxsize=16)
def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit from a plain (unsegmented) sieve."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.flatnonzero(is_prime).astype(np.int64)
    primes.setflags(write=False)
    return primes


@dataclass
class SieveSegment:
    lo: int
    hi: int
    bits: np.ndarray

    def __post_init__(self):
        if self.lo % 2 or self.hi % 2 or self.hi < self.lo:
            raise InvalidParams(f"segment bounds must be even and ordered: [{self.lo}, {self.hi})")
        if len(self.bits) != (self.hi - self.lo) // 2:
            raise InvalidParams(f"segment [{self.lo}, {self.hi}) expects {(self.hi - self.lo) // 2} slots, got {len(self.bits)}")

    @property
    def slots(self) -> int:
        return len(self.bits)

    def primes(self) -> np.ndarray:
        """Odd primes in [lo, hi), ascending."""
        return self.lo + 1 + 2 * np.flatnonzero(~self.bits).astype(np.int64)

    def packed(self) -> np.ndarray:
        """Composite flags as little-endian 64-bit words (bit i of the stream = slot i)."""
        raw = np.packbits(self.bits, bitorder='little')
        pad = (-len(raw)) % 8
        if pad:
            raw = np.concatenate([raw, np.zeros(pad, dtype=np.uint8)])
        return raw.view('<u8')

    @classmethod
    def from_packed(cls, lo: int, hi: int, words: np.ndarray) -> 'SieveSegment':
        slots = (hi - lo) // 2
        raw = np.asarray(words, dtype='<u8').view(np.uint8)
        bits = np.unpackbits(raw, bitorder='little')[:slots].astype(bool)
        return cls(lo=lo, hi=hi, bits=bits)


def sieve_segment(lo: int, hi: int, base: np.ndarray) -> SieveSegment:
    """Mark odd composites in [lo, hi) using base primes covering sqrt(hi)."""
    bits = np.zeros((hi - lo) // 2, dtype=bool)
    for p in base:
        p = int(p)
        if p == 2:
            continue
        p2 = p * p
        if p2 >= hi:
            break
        start = max(p2, ((lo + p - 1) // p) * p)
        if (start & 1) == 0:
            start += p
        if start >= hi:
            continue
        bits[(start - lo - 1) // 2::p] = True
    if lo == 0 and len(bits):
        bits[0] = True
    return SieveSegment(lo=lo, hi=hi, bits=bits)


def segment_bounds(limit: int, segment_size: Optional[int] = None) -> Iterator[tuple]:
    """(lo, hi) pairs tiling [0, limit] with even bounds."""
    slots = int(segment_size or settings.segment_size or DEFAULT_SEGMENT_SIZE)
    if slots < 1:
        raise InvalidParams(f"segment size must be positive, got {slots}")
    span = 2 * slots
    end = limit + 1 + (limit + 1) % 2
    lo = 0
    while lo < end:
        hi = min(lo + span, end)
        yield lo, hi
        lo = hi


def iter_segments(limit: int, segment_size: Optional[int] = None, cache=None) -> Iterator[SieveSegment]:
    base = small_primes(math.isqrt(limit) + 1)
    for lo, hi in segment_bounds(limit, segment_size):
        segment = cache.load(lo, hi) if cache is not None else None
        if segment is None:
            segment = sieve_segment(lo, hi, base)
            if cache is not None:
                cache.store(segment)
        yield segment


def iter_prime_blocks(x: int, segment_size: Optional[int] = None, cache=None) -> Iterator[np.ndarray]:
    """Primes <= x as ascending int64 blocks, one per segment (2 leads the first)."""
    if x < 2:
        return
    first = True
    for segment in iter_segments(x, segment_size, cache):
        block = segment.primes()
        if segment.hi > x:
            block = block[block <= x]
        if first:
            block = np.concatenate([np.array([2], dtype=np.int64), block])
            first = False
        if len(block):
            yield block


def primes_up_to(x: int, segment_size: Optional[int] = None) -> Iterator[int]:
    """Every prime <= x exactly once, ascending."""
    for block in iter_prime_blocks(x, segment_size):
        yield from block.tolist()


def pi(x: int, segment_size: Optional[int] = None, workers: Optional[int] = None) -> int:
    """Prime counting function."""
    workers = int(workers or settings.workers)
    if workers > 1 and x >= 2:
        from beattyprimes.pool.segment_manager import SegmentManager
        return SegmentManager(segment_size=segment_size).prime_count(x, num_workers=workers)
    return sum(len(block) for block in iter_prime_blocks(x, segment_size))


def trial_division_primes(x: int) -> list:
    """Reference list of primes <= x by trial division."""
    found = []
    for n in range(2, x + 1):
        limit = math.isqrt(n)
        if all(n % p for p in takewhile(lambda q: q <= limit, found)):
            found.append(n)
    return found

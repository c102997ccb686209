"""On-disk cache of sieved segments.

File layout (all little-endian): 4-byte magic ``BSV1``, u64 lo, u64 hi,
then the packed composite flags as u64 words.
"""

import os
import struct
from pathlib import Path
from typing import Optional

import numpy as np

from beattyprimes.basic.my_logger import file_logger
from beattyprimes.basic.util import swallow_exceptions
from beattyprimes.primes.sieve import SieveSegment

MAGIC = b"BSV1"
HEADER = struct.Struct('<4sQQ')


class SegmentCache:
    """Directory of ``<lo>_<hi>.bsv`` files, one per segment."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def path_for(self, lo: int, hi: int) -> Path:
        return self.directory / f"{lo}_{hi}.bsv"

    def store(self, segment: SieveSegment) -> Path:
        path = self.path_for(segment.lo, segment.hi)
        tmp = path.with_suffix('.tmp')
        with open(tmp, 'wb') as f:
            f.write(HEADER.pack(MAGIC, segment.lo, segment.hi))
            f.write(segment.packed().tobytes())
        os.replace(tmp, path)
        return path

    def load(self, lo: int, hi: int) -> Optional[SieveSegment]:
        path = self.path_for(lo, hi)
        if not path.exists():
            self.misses += 1
            return None
        segment = self._read(path, lo, hi)
        if segment is None:
            self.misses += 1
        else:
            self.hits += 1
        return segment

    @swallow_exceptions
    def _read(self, path: Path, lo: int, hi: int) -> Optional[SieveSegment]:
        with open(path, 'rb') as f:
            magic, file_lo, file_hi = HEADER.unpack(f.read(HEADER.size))
            payload = f.read()
        if magic != MAGIC or (file_lo, file_hi) != (lo, hi):
            file_logger.error(f"stale or foreign cache file {path}: {magic!r} [{file_lo}, {file_hi})")
            return None
        words = np.frombuffer(payload, dtype='<u8')
        return SieveSegment.from_packed(lo, hi, words)

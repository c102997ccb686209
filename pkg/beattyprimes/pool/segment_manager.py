"""
SegmentManager: Producer that feeds segment jobs through a bounded queue to
SegmentRunner consumers and merges their summaries in segment order.
"""
import math
import signal
import threading
from collections import Counter
from multiprocessing import Manager
from typing import Dict, List, Optional

from beattyprimes.basic import settings
from beattyprimes.basic.errors import SieveError
from beattyprimes.basic.my_logger import logger
from beattyprimes.basic.util import log_banner
from beattyprimes.pool.segment_runner import SegmentRunner, SegmentSummary
from beattyprimes.primes.pairs import GapHistogram, successor_window
from beattyprimes.primes.sieve import segment_bounds, small_primes
from beattyprimes.workload.tasks.runner_type import RunnerType


class SegmentManager:
    """
    Producer of (index, lo, hi) jobs.

    Only puts jobs into the queue when it's not full (bounded queue); the
    merge is a map-sum over segments taken in index order, so the result
    does not depend on worker count or scheduling.
    """

    def __init__(self, global_params: dict = None, queue_size: int = 64,
                 segment_size: Optional[int] = None,
                 runner_type: RunnerType = RunnerType.GAP_HISTOGRAM):
        params = global_params or {}
        self.queue_size = int(params.get('queue_size', queue_size))
        self.segment_size = int(params.get('segment_size', segment_size or settings.segment_size))
        self.queue = Manager().Queue(maxsize=self.queue_size)
        self.runner: Optional[SegmentRunner] = None
        self.runner_type = runner_type
        self._total_produced = 0
        self._stop_requested = False
        self._original_sigint = None
        self.last_metrics: List[Dict] = []

    def _handle_sigint(self, signum, frame):
        logger.warning("Received Ctrl+C, stopping sieve workers...")
        self._stop_requested = True
        if self.runner:
            self.runner.stop(force=True)
        signal.signal(signal.SIGINT, self._original_sigint)

    def produce(self, limit: int, num_workers: int):
        for index, (lo, hi) in enumerate(segment_bounds(limit, self.segment_size)):
            if self._stop_requested:
                break
            self.queue.put((index, lo, hi))
            self._total_produced += 1
        for _ in range(num_workers):
            self.queue.put(None)

    def run(self, x: int, limit: int, num_workers: int = 4) -> List[SegmentSummary]:
        """Sieve [0, limit] across num_workers processes; summaries in segment order."""
        self._total_produced = 0
        self._stop_requested = False
        base = small_primes(math.isqrt(limit) + 1)
        self._original_sigint = signal.signal(signal.SIGINT, self._handle_sigint)
        try:
            self.runner = SegmentRunner(
                job_queue=self.queue,
                x=x,
                base=base,
                num_workers=num_workers,
                runner_type=self.runner_type
            )
            self.runner.start()
            if not self.runner.wait_until_ready(timeout=30.0):
                logger.warning("Not all sieve workers started within timeout")

            producer_thread = threading.Thread(target=self.produce, args=(limit, num_workers))
            producer_thread.start()
            producer_thread.join()

            if self._stop_requested:
                raise SieveError("sieve interrupted by user")
            self.runner.join()
            summaries = self.runner.collect_summaries(self._total_produced)
            self.last_metrics = self.runner.collect_metrics()
            if len(summaries) != self._total_produced:
                raise SieveError(f"expected {self._total_produced} segment summaries, got {len(summaries)}")
            return summaries
        finally:
            signal.signal(signal.SIGINT, self._original_sigint)

    def prime_count(self, x: int, num_workers: int = 4) -> int:
        if x < 2:
            return 0
        self.runner_type = RunnerType.PRIME_COUNT
        summaries = self.run(x, x, num_workers)
        return 1 + sum(s.count for s in summaries)

    def gap_histogram(self, x: int, num_workers: int = 4) -> GapHistogram:
        if x < 2:
            return GapHistogram(x=x)
        self.runner_type = RunnerType.GAP_HISTOGRAM
        summaries = self.run(x, x + successor_window(x), num_workers)
        counts = Counter()
        previous = 2
        for summary in summaries:
            if summary.empty:
                continue
            if previous <= x:
                counts[summary.first - previous] += 1
            counts.update(summary.gaps)
            previous = summary.last
            if previous > x:
                break
        if previous <= x:
            raise SieveError(f"no prime found past {x} within the extension window")
        self.print_report()
        return GapHistogram(x=x, counts=dict(sorted(counts.items())))

    def print_report(self) -> None:
        rows = [(f"worker {m['runner_id']}",
                 f"{m['segment_count']} segments, {m['throughput']:,.0f} slots/sec, "
                 f"avg {m['avg_segment_ms']:.1f}ms")
                for m in self.last_metrics]
        log_banner("SIEVE POOL REPORT", {
            "Segments:": [("produced", f"{self._total_produced:,}")],
            "Per Worker:": rows,
        })

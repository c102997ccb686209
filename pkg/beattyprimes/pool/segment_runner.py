"""
SegmentRunner: Multi-process consumer that sieves segments taken from a
queue and reports per-segment summaries. Uses true multiprocessing for
parallel execution.
"""
import time
from dataclasses import dataclass, field
from multiprocessing import Process, Manager, Queue, Value
from queue import Empty
from ctypes import c_bool, c_int
from typing import Dict, Any, List

import numpy as np

from beattyprimes.basic.my_logger import file_logger
from beattyprimes.primes.sieve import sieve_segment
from beattyprimes.workload.tasks.runner_type import RunnerType


@dataclass
class SegmentSummary:
    """What the merge step needs to know about one segment."""
    index: int
    lo: int
    hi: int
    first: int = -1
    last: int = -1
    count: int = 0
    gaps: Dict[int, int] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return self.first < 0


@dataclass
class RunnerMetrics:
    """Metrics collected by each worker process."""
    runner_id: int
    segment_count: int = 0
    slot_count: int = 0
    sieve_seconds: List[float] = field(default_factory=list)
    start_time: float = 0
    end_time: float = 0

    def to_dict(self) -> Dict[str, Any]:
        duration = self.end_time - self.start_time if self.end_time > self.start_time else 0
        seconds = self.sieve_seconds or [0]
        return {
            "runner_id": self.runner_id,
            "segment_count": self.segment_count,
            "slot_count": self.slot_count,
            "duration_sec": duration,
            "throughput": self.slot_count / duration if duration > 0 else 0,
            "avg_segment_ms": 1000 * sum(seconds) / len(seconds),
            "max_segment_ms": 1000 * max(seconds),
        }


def summarize_segment(index: int, lo: int, hi: int, x: int, base: np.ndarray,
                      runner_type: RunnerType) -> SegmentSummary:
    primes = sieve_segment(lo, hi, base).primes()
    summary = SegmentSummary(index=index, lo=lo, hi=hi)
    if not len(primes):
        return summary
    summary.first = int(primes[0])
    summary.last = int(primes[-1])
    summary.count = int(np.count_nonzero(primes <= x))
    if runner_type == RunnerType.GAP_HISTOGRAM and len(primes) > 1:
        p, q = primes[:-1], primes[1:]
        keep = p <= x
        gaps, counts = np.unique(q[keep] - p[keep], return_counts=True)
        summary.gaps = dict(zip(gaps.tolist(), counts.tolist()))
    return summary


def _worker_process(
    runner_id: int,
    job_queue: Queue,
    result_queue: Queue,
    metrics_queue: Queue,
    x: int,
    base: np.ndarray,
    stop_signal: Value,
    ready_signal: Value,
    runner_type: RunnerType
):
    """
    Worker process that sieves the segments it pulls from job_queue.
    A None job is the end-of-stream sentinel.
    """
    with ready_signal.get_lock():
        ready_signal.value += 1
    file_logger.debug(f"SegmentRunner {runner_id} started")

    metrics = RunnerMetrics(runner_id=runner_id)
    metrics.start_time = time.time()

    while not stop_signal.value:
        try:
            job = job_queue.get(timeout=0.5)
        except Empty:
            continue
        if job is None:
            break

        index, lo, hi = job
        start = time.time()
        summary = summarize_segment(index, lo, hi, x, base, runner_type)
        metrics.sieve_seconds.append(time.time() - start)
        metrics.segment_count += 1
        metrics.slot_count += (hi - lo) // 2
        result_queue.put(summary)

    metrics.end_time = time.time()
    metrics_queue.put(metrics.to_dict())
    file_logger.debug(f"SegmentRunner {runner_id} stopped")


class SegmentRunner:
    """
    Multi-process runner that spawns worker processes to sieve segments.
    Each worker runs in its own process for true parallelism.
    """

    def __init__(
        self,
        job_queue: Queue,
        x: int,
        base: np.ndarray,
        num_workers: int = 4,
        runner_type: RunnerType = RunnerType.UNKNOWN
    ):
        self.job_queue = job_queue
        self.x = x
        self.base = base
        self.num_workers = num_workers

        manager = Manager()
        self.result_queue = manager.Queue()
        self.metrics_queue = manager.Queue()
        self.stop_signal = Value(c_bool, False)
        self.ready_count = Value(c_int, 0)
        self.workers: list[Process] = []
        self.runner_type = runner_type

    def start(self):
        """Start all worker processes."""
        for i in range(self.num_workers):
            p = Process(
                target=_worker_process,
                args=(
                    i,
                    self.job_queue,
                    self.result_queue,
                    self.metrics_queue,
                    self.x,
                    self.base,
                    self.stop_signal,
                    self.ready_count,
                    self.runner_type
                )
            )
            p.start()
            self.workers.append(p)

    def wait_until_ready(self, timeout: float = 30.0) -> bool:
        deadline = time.time() + timeout
        while self.ready_count.value < self.num_workers:
            if time.time() > deadline:
                return False
            time.sleep(0.1)
        return True

    def stop(self, force: bool = False):
        """Signal all workers to stop and wait for them to send metrics."""
        self.stop_signal.value = True

        if force:
            for p in self.workers:
                if p.is_alive():
                    p.terminate()
        else:
            for p in self.workers:
                p.join(timeout=5)
                if p.is_alive():
                    p.terminate()

        self.workers.clear()

    def join(self):
        """Wait for workers that exit on their own (after the sentinels)."""
        for p in self.workers:
            p.join()
        self.workers.clear()

    def collect_summaries(self, expected: int, timeout: float = 600.0) -> List[SegmentSummary]:
        summaries = []
        deadline = time.time() + timeout
        while len(summaries) < expected and time.time() < deadline:
            try:
                summaries.append(self.result_queue.get(timeout=0.5))
            except Empty:
                continue
        return sorted(summaries, key=lambda s: s.index)

    def collect_metrics(self, timeout: float = 2.0) -> List[Dict[str, Any]]:
        worker_metrics = []
        deadline = time.time() + timeout
        while len(worker_metrics) < self.num_workers and time.time() < deadline:
            try:
                worker_metrics.append(self.metrics_queue.get(timeout=0.5))
            except Empty:
                continue
        return sorted(worker_metrics, key=lambda m: m['runner_id'])

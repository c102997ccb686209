"""Counting primes p <= x with p in B and p# in B-hat."""

import math
from collections import Counter
from typing import Optional

import numpy as np
from tqdm import tqdm

from beattyprimes.basic.util import trace
from beattyprimes.beatty.sequence import BeattyParams, contains_many
from beattyprimes.experiment.config import ExperimentConfig
from beattyprimes.experiment.report import ExperimentReport, ReportRow
from beattyprimes.primes.pairs import pair_blocks
from beattyprimes.primes.sieve import iter_prime_blocks


def _filtered(cfg: ExperimentConfig, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    mask = contains_many(cfg.params, p)
    if mask.any():
        mask[mask] = contains_many(cfg.params_hat, q[mask])
    return mask


def count_consecutive_in_beatty(cfg: ExperimentConfig, x: int, segment_size: Optional[int] = None) -> int:
    """pi(x; B, B-hat); p# may exceed x."""
    return sum(int(np.count_nonzero(_filtered(cfg, p, q))) for p, q in pair_blocks(x, segment_size))


def count_in_beatty_h(cfg: ExperimentConfig, x: int, h: int, segment_size: Optional[int] = None) -> int:
    """pi_h(x; B, B-hat): as above with p# - p = h."""
    total = 0
    for p, q in pair_blocks(x, segment_size):
        gap = q - p == h
        total += int(np.count_nonzero(_filtered(cfg, p[gap], q[gap])))
    return total


def beatty_gap_breakdown(cfg: ExperimentConfig, x: int, segment_size: Optional[int] = None) -> Counter:
    """Gap -> number of qualifying pairs, in one pass."""
    counts = Counter()
    for p, q in pair_blocks(x, segment_size):
        mask = _filtered(cfg, p, q)
        gaps, n = np.unique(q[mask] - p[mask], return_counts=True)
        counts.update(dict(zip(gaps.tolist(), n.tolist())))
    return counts


def single_beatty_prime_count(params: BeattyParams, x: int, segment_size: Optional[int] = None) -> int:
    """#{p <= x prime : p in B}."""
    return sum(int(np.count_nonzero(contains_many(params, block))) for block in iter_prime_blocks(x, segment_size))


def normalized_error(abs_error: float, x: int) -> float:
    """abs_error / (x (log x)^(-3/2))."""
    if x < 3:
        return 0.0
    return abs_error / (x * math.log(x) ** -1.5)


@trace
def run_experiment(cfg: ExperimentConfig, segment_size: Optional[int] = None,
                   progress: bool = False) -> ExperimentReport:
    """One streaming pass up to the last checkpoint; counters are read off at every checkpoint."""
    report = ExperimentReport(config=cfg.to_dict())
    if not cfg.checkpoints:
        return report
    marks = np.asarray(cfg.checkpoints, dtype=np.int64)
    counts = np.zeros(len(marks), dtype=np.int64)
    primes = np.zeros(len(marks), dtype=np.int64)
    blocks = pair_blocks(int(marks[-1]), segment_size)
    for p, q in tqdm(blocks, desc="pairs", unit="block", disable=not progress):
        primes += np.searchsorted(p, marks, side='right')
        counts += np.searchsorted(p[_filtered(cfg, p, q)], marks, side='right')
    density = cfg.density
    for x, count, pi_x in zip(marks.tolist(), counts.tolist(), primes.tolist()):
        main = density * pi_x
        abs_error = abs(count - main)
        report.rows.append(ReportRow(x=x, count=count, pi_x=pi_x, main_term=main,
                                     abs_error=abs_error, normalized_error=normalized_error(abs_error, x)))
    return report

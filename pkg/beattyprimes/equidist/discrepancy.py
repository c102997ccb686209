"""Discrepancy of finite point sets in [0, 1).

`discrepancy` is the extreme discrepancy over open intervals (b, c) with
0 <= b < c <= 1:

    D = sup | #{x_i in (b, c)} / M - (c - b) |

Writing L(v) = #{x_i < v} and R(v) = #{x_i <= v}, an over-count is
approached by b rising to a point from the left and c falling to a point
from the right; an under-count is attained with b and c on points or on
0 and 1. Both suprema reduce to prefix max/min scans of the sorted points.
"""

import math
from dataclasses import dataclass, asdict
from typing import Tuple

import numpy as np

from beattyprimes.basic.errors import InvalidParams


def _prepare(points) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    x = np.sort(np.asarray(points, dtype=np.float64).ravel())
    M = len(x)
    if M == 0:
        raise InvalidParams("discrepancy needs at least one point")
    if x[0] < 0 or x[-1] >= 1:
        raise InvalidParams("points must lie in [0, 1)")
    values, counts = np.unique(x, return_counts=True)
    right = np.cumsum(counts)
    left = right - counts
    return values, left / M, right / M, M


def discrepancy(points) -> float:
    """Extreme discrepancy over open intervals, O(M log M)."""
    v, L, R, _ = _prepare(points)
    zeros = R[0] if v[0] == 0 else 0.0

    # over-count: (R(c) - c) - (L(b) - b), b <= c, b at 0 uses R(0)
    b_over = np.where(v > 0, v - L, -R)
    best_b = np.maximum(np.maximum.accumulate(b_over), -zeros)
    over = max(float(np.max(best_b + (R - v))), float(best_b[-1]))

    # under-count: (c - L(c)) - (b - R(b)), b < c strictly
    b_under = v - R
    prefix = np.minimum.accumulate(b_under)
    before = np.concatenate([[np.inf], prefix[:-1]])
    before = np.where(v > 0, np.minimum(before, -zeros), before)
    c_under = v - L
    under_points = float(np.max(c_under - before)) if len(v) else 0.0
    under_one = -min(float(prefix[-1]), -zeros)
    return max(over, under_points, under_one, 0.0)


def star_discrepancy(points) -> float:
    """sup over c of | #{x_i < c} / M - c |."""
    v, L, R, _ = _prepare(points)
    return float(max(np.max(R - v), np.max(v - L)))


def discrepancy_bruteforce(points) -> float:
    """O(M^2) oracle: every interval type over endpoints {0} + points + {1}.

    Closed ends are limits of open intervals, except at 0 where an open
    interval can never contain the point 0.
    """
    x = np.sort(np.asarray(points, dtype=np.float64).ravel())
    M = len(x)
    if M == 0:
        raise InvalidParams("discrepancy needs at least one point")
    ends = np.unique(np.concatenate([[0.0], x, [1.0]]))
    L = np.searchsorted(x, ends, side='left').astype(np.float64)
    R = np.searchsorted(x, ends, side='right').astype(np.float64)
    L_left = np.where(ends > 0, L, R)  # b = 0 cannot close on the left
    length = ends[None, :] - ends[:, None]
    best = 0.0
    for count, strict in ((L[None, :] - R[:, None], True),          # (b, c)
                          (R[None, :] - L_left[:, None], False),    # [b, c]
                          (L[None, :] - L_left[:, None], True),     # [b, c)
                          (R[None, :] - R[:, None], True)):         # (b, c]
        valid = length > 0 if strict else length >= 0
        dev = np.abs(count / M - length)
        best = max(best, float(np.max(np.where(valid, dev, 0.0))))
    return best


def interval_count(points, b: float, c: float) -> int:
    """#{x_i in (b, c)}."""
    x = np.asarray(points, dtype=np.float64)
    return int(np.count_nonzero((x > b) & (x < c)))


def beatty_points(a: float, b: float, M: int) -> np.ndarray:
    """{a m + b} for m = 1..M."""
    m = np.arange(1, M + 1, dtype=np.float64)
    return np.mod(a * m + b, 1.0)


@dataclass
class ExceptionalCount:
    count: int
    measure: float
    discrepancy: float
    bound: float

    def to_dict(self):
        return asdict(self)


def exceptional_count(a: float, b: float, delta: float, M: int) -> ExceptionalCount:
    """#{m <= M : {a m + b} in [0, D) u (a - D, a + D) u (1 - D, 1)} with D = delta,
    next to the bound |I| M + 3 M D(M), one D(M) per interval."""
    if not 0 < delta < 0.5 * min(a, 1 - a):
        raise InvalidParams(f"delta must lie in (0, min(a, 1-a)/2), got {delta}")
    points = beatty_points(a, b, M)
    hit = (points < delta) | (np.abs(points - a) < delta) | (points > 1 - delta)
    d = discrepancy(points)
    measure = 4 * delta
    return ExceptionalCount(count=int(np.count_nonzero(hit)), measure=measure,
                            discrepancy=d, bound=measure * M + M * d * 3)


def discrepancy_trend(a: float, b: float, M: int) -> float:
    """D(M) * M / log M for the Beatty points."""
    return discrepancy(beatty_points(a, b, M)) * M / math.log(M)

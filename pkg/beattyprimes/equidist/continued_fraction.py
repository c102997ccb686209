"""Certified continued fractions and irrationality-type estimates.

A named constant is bracketed by an interval [v - g, v + g] at increasing
precision; both endpoints are exact dyadic rationals whose expansions are
computed with integer arithmetic. Every number in the interval shares the
partial quotients on which the two endpoint expansions agree, so those
quotients are certified for the constant itself.
"""

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import mpmath
import numpy as np
from mpmath import mp

from beattyprimes.basic.errors import InvalidParams, PrecisionExhausted
from beattyprimes.basic.my_logger import file_logger
from beattyprimes.beatty.constants import ExactRational, RealConstant, parse_real

CF_PRECISION_LEVELS = (128, 256, 512, 1024, 2048, 4096)


@dataclass(frozen=True)
class ContinuedFraction:
    a0: int
    quotients: Tuple[int, ...] = ()
    convergents: Tuple[Tuple[int, int], ...] = field(default=())
    finite: bool = False

    @property
    def terms(self) -> List[int]:
        return [self.a0, *self.quotients]

    def __str__(self) -> str:
        return f"[{self.a0}; {', '.join(map(str, self.quotients))}]"


def convergents_of(terms: Sequence[int]) -> List[Tuple[int, int]]:
    """p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}."""
    p_prev, q_prev, p, q = 1, 0, 0, 1
    out = []
    for a in terms:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return out


def rational_from_quotients(terms: Sequence[int]) -> ExactRational:
    p, q = convergents_of(terms)[-1]
    return ExactRational(p, q)


def _ratio(value: mpmath.mpf) -> Tuple[int, int]:
    man, exp = value.man_exp
    return (man << exp, 1) if exp >= 0 else (man, 1 << -exp)


def _expand(num: int, den: int, n: int) -> Tuple[List[int], bool]:
    out = []
    while den and len(out) < n:
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return out, den == 0


def _build(terms: List[int], finite: bool) -> ContinuedFraction:
    return ContinuedFraction(a0=terms[0], quotients=tuple(terms[1:]),
                             convergents=tuple(convergents_of(terms)), finite=finite)


def continued_fraction(x, n: int) -> ContinuedFraction:
    """First n terms (a0 included) of the expansion of x.

    Exact rationals expand exactly and may stop early (finite=True).
    """
    if n < 1:
        raise InvalidParams(f"n must be >= 1, got {n}")
    x = parse_real(x)
    if x.is_exact:
        terms, finite = _expand(*x.as_pair(), n)
        return _build(terms, finite)

    for bits in CF_PRECISION_LEVELS:
        with mp.workprec(bits + 64):
            v = x.value(bits + 32)
            guard = mpmath.ldexp(abs(v) + 1, -bits)
            lo, hi = _ratio(v - guard), _ratio(v + guard)
        lo_terms, _ = _expand(*lo, n + 1)
        hi_terms, _ = _expand(*hi, n + 1)
        if len(lo_terms) > n and len(hi_terms) > n and lo_terms[:n] == hi_terms[:n]:
            return _build(lo_terms[:n], False)
        file_logger.debug(f"continued_fraction({x.label}, {n}) not certified at {bits} bits")
    raise PrecisionExhausted(f"cannot certify {n} partial quotients of {x.label}", bits=CF_PRECISION_LEVELS[-1])


def _convergents_up_to(x: RealConstant, N: int) -> Tuple[List[Tuple[int, int]], bool]:
    n = 16
    while True:
        cf = continued_fraction(x, n)
        if cf.finite or cf.convergents[-1][1] > N:
            return [pq for pq in cf.convergents if pq[1] <= N], cf.finite
        n *= 2


def distance_to_nearest(x: RealConstant, p: int, q: int) -> float:
    """|x q - p|, which is the distance of x q to the nearest integer when p/q is a convergent."""
    if x.is_exact:
        num, den = x.as_pair()
        return abs(num * q - p * den) / den
    bits = 2 * q.bit_length() + 96
    with mp.workprec(bits):
        return float(abs(x.value(bits) * q - p))


def type_estimate(x, N: int, method: str = 'slope') -> float:
    """Estimate the irrationality type from convergents with 2 <= q_k <= N.

    method='max' is max_k log(1/||x q_k||)/log q_k; method='slope' (default)
    fits log(1/||x q_k||) against log q_k by least squares and returns the
    slope, which drops the constant offset that biases the max upwards.
    """
    if N < 10:
        raise InvalidParams(f"N must be >= 10, got {N}")
    if method not in ('slope', 'max'):
        raise InvalidParams(f"unknown type estimator '{method}'")
    x = parse_real(x)
    convergents, _ = _convergents_up_to(x, N)
    log_q, log_inv = [], []
    for p, q in convergents:
        if q < 2:
            continue
        dist = distance_to_nearest(x, p, q)
        if dist == 0:
            continue
        log_q.append(math.log(q))
        log_inv.append(-math.log(dist))
    if not log_q:
        raise InvalidParams(f"no usable convergent of {x.label} with 2 <= q <= {N}")
    log_q, log_inv = np.array(log_q), np.array(log_inv)
    if method == 'max' or len(log_q) < 2:
        return float(np.max(log_inv / log_q))
    slope, _ = np.polyfit(log_q, log_inv, 1)
    return float(slope)

"""Hardy-Littlewood singular series and their modified (alternating subset) form.

S(H) = prod_p (1 - |H mod p|/p)(1 - 1/p)^(-|H|) is evaluated as a partial
product over p <= p_max, in log space with compensated summation. For
p > max|h_i - h_j| every factor equals (1 - k/p)(1 - 1/p)^(-k) with k = |H|,
so log of each factor is about -C(k,2)/p^2; that gives the tail estimate.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Tuple

import numpy as np
from sympy import primefactors

from beattyprimes.basic import settings
from beattyprimes.basic.errors import InvalidParams
from beattyprimes.primes.sieve import small_primes

MAX_OFFSETS = 8
EULER_GAMMA = 0.57721566490153286061
# constant in the second-order term of the pair double sum
PAIR_SUM_A = 2 - EULER_GAMMA - math.log(2 * math.pi)
TAIL_SAFETY = 1.5


@dataclass(frozen=True)
class OffsetSet:
    offsets: Tuple[int, ...] = ()

    def __post_init__(self):
        if list(self.offsets) != sorted(set(self.offsets)):
            raise InvalidParams(f"offsets must be sorted and distinct: {self.offsets}")
        if len(self.offsets) > MAX_OFFSETS:
            raise InvalidParams(f"at most {MAX_OFFSETS} offsets supported, got {len(self.offsets)}")

    @classmethod
    def of(cls, offsets: Iterable[int]) -> 'OffsetSet':
        return cls(tuple(sorted(set(int(h) for h in offsets))))

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.offsets)

    @property
    def span(self) -> int:
        return self.offsets[-1] - self.offsets[0] if self.offsets else 0

    def normalized(self) -> 'OffsetSet':
        """The translate with smallest offset 0."""
        if not self.offsets:
            return self
        lo = self.offsets[0]
        return OffsetSet(tuple(h - lo for h in self.offsets))

    def shifted(self, c: int) -> 'OffsetSet':
        return OffsetSet(tuple(h + c for h in self.offsets))

    def subsets(self) -> Iterator['OffsetSet']:
        for r in range(len(self.offsets) + 1):
            for combo in combinations(self.offsets, r):
                yield OffsetSet(combo)


@dataclass(frozen=True)
class SingularValue:
    value: float
    tail_bound: float
    p_max: int

    def __float__(self) -> float:
        return self.value

    def to_dict(self):
        return {'value': self.value, 'tail_bound': self.tail_bound, 'p_max': self.p_max}


def _as_offsets(H) -> OffsetSet:
    return H if isinstance(H, OffsetSet) else OffsetSet.of(H)


def _p_max(p_max) -> int:
    p_max = int(p_max or settings.p_max)
    if p_max < 2:
        raise InvalidParams(f"p_max must be >= 2, got {p_max}")
    return p_max


def residue_count(H, p: int) -> int:
    """|H mod p|."""
    return len({h % p for h in _as_offsets(H)})


def relative_tail(k: int, p_max: int) -> float:
    """Heuristic relative error of truncating the product at p_max."""
    if k < 2:
        return 0.0
    return TAIL_SAFETY * math.comb(k, 2) / (p_max * math.log(p_max))


def _distinct_residues(offsets: np.ndarray, primes: np.ndarray) -> np.ndarray:
    residues = np.sort(offsets[None, :] % primes[:, None], axis=1)
    return 1 + np.count_nonzero(np.diff(residues, axis=1), axis=1)


@lru_cache(maxsize=1 << 16)
def _singular_normalized(offsets: Tuple[int, ...], p_max: int) -> SingularValue:
    k = len(offsets)
    if k < 2:
        return SingularValue(1.0, 0.0, p_max)
    if k == 2:
        return pair_singular_series(offsets[1], p_max)

    primes = small_primes(p_max).astype(np.float64)
    span = offsets[-1]
    counts = np.full(len(primes), float(k))
    small = int(np.searchsorted(primes, span, side='right'))
    if small:
        counts[:small] = _distinct_residues(np.array(offsets, dtype=np.int64), primes[:small].astype(np.int64))
    if np.any(counts >= primes):
        return SingularValue(0.0, 0.0, p_max)
    logs = np.log1p(-counts / primes) - k * np.log1p(-1.0 / primes)
    value = math.exp(math.fsum(logs))
    return SingularValue(value, value * relative_tail(k, p_max), p_max)


def singular_series(H, p_max: int = None) -> SingularValue:
    """Partial Euler product of S(H) over p <= p_max.

    Translation invariant by construction: the cache key is the normalized set.
    """
    H = _as_offsets(H)
    return _singular_normalized(H.normalized().offsets, _p_max(p_max))


@lru_cache(maxsize=8)
def _pair_base(p_max: int) -> float:
    """log 2 + sum over odd p <= p_max of log((1 - 2/p)/(1 - 1/p)^2)."""
    primes = small_primes(p_max)[1:].astype(np.float64)
    return math.log(2.0) + math.fsum(np.log1p(-2.0 / primes) - 2.0 * np.log1p(-1.0 / primes))


def pair_singular_series(h: int, p_max: int = None) -> SingularValue:
    """S({0, h}); only odd primes dividing h change their factor."""
    p_max = _p_max(p_max)
    h = abs(int(h))
    if h == 0:
        return SingularValue(1.0, 0.0, p_max)
    if h % 2:
        return SingularValue(0.0, 0.0, p_max)
    log_value = _pair_base(p_max) + math.fsum(
        math.log((p - 1) / (p - 2)) for p in primefactors(h) if 2 < p <= p_max)
    value = math.exp(log_value)
    return SingularValue(value, value * relative_tail(2, p_max), p_max)


@lru_cache(maxsize=8)
def pair_singular_table(h_max: int, p_max: int) -> np.ndarray:
    """S({0, t}) for t = 0..h_max as one array (t = 0 gives S({0}) = 1)."""
    corrections = np.zeros(h_max + 1)
    for p in small_primes(min(p_max, max(h_max, 2))).tolist():
        if p > 2:
            corrections[p::p] += math.log((p - 1) / (p - 2))
    table = np.exp(_pair_base(p_max) + corrections)
    table[1::2] = 0.0
    table[0] = 1.0
    table.setflags(write=False)
    return table


def modified_singular_series(H, p_max: int = None) -> SingularValue:
    """S0(H) = sum over T subset of H of (-1)^|H minus T| S(T)."""
    H = _as_offsets(H)
    p_max = _p_max(p_max)
    terms, tails = [], []
    for T in H.subsets():
        s = singular_series(T, p_max)
        sign = -1 if (len(H) - len(T)) % 2 else 1
        terms.append(sign * s.value)
        tails.append(s.tail_bound)
    return SingularValue(math.fsum(terms), math.fsum(tails), p_max)


def pair_modified_table(h_max: int, p_max: int = None) -> np.ndarray:
    """S0({0, t}) = S({0, t}) - 1 for t = 1..h_max, at index t (index 0 unused, set to 0)."""
    table = pair_singular_table(int(h_max), _p_max(p_max)) - 1.0
    table[0] = 0.0
    return table


def _check_even(h: int, minimum: int) -> int:
    h = int(h)
    if h < minimum or h % 2:
        raise InvalidParams(f"h must be even and >= {minimum}, got {h}")
    return h


def g0_pair_sum_B(h: int, p_max: int = None) -> float:
    """sum_{t=1}^{h-1} S0({0, t})."""
    h = _check_even(h, 2)
    return math.fsum(pair_modified_table(h, p_max)[1:h])


def g0_pair_sum_C(h: int, p_max: int = None) -> float:
    """sum_{t=1}^{h-1} S0({t, h}), each S({t, h}) from the residues of t and h mod p."""
    h = _check_even(h, 2)
    p_max = _p_max(p_max)
    primes = small_primes(p_max)
    t = np.arange(1, h, dtype=np.int64)
    # above h the two offsets never collide
    cut = int(np.searchsorted(primes, h, side='right'))
    large = primes[cut:].astype(np.float64)
    logs = np.full(len(t), math.fsum(np.log1p(-2.0 / large) - 2.0 * np.log1p(-1.0 / large)))
    alive = np.ones(len(t), dtype=bool)
    for p in primes[:cut].tolist():
        k = np.where(t % p == h % p, 1.0, 2.0)
        alive &= k < p
        with np.errstate(divide='ignore'):
            logs += np.log1p(-k / p) - 2.0 * math.log1p(-1.0 / p)
    values = np.where(alive, np.exp(logs), 0.0)
    return math.fsum((values - 1.0).tolist())


def g0_pair_sum_D(h: int, p_max: int = None) -> float:
    """sum_{1<=t1<t2<=h-1} S0({t1, t2}); the pair {t1, t2} depends on t2 - t1 = d only,
    and d occurs h - 1 - d times."""
    h = _check_even(h, 4)
    table = pair_modified_table(h, p_max)
    d = np.arange(1, h - 1)
    return math.fsum((h - 1 - d) * table[1:h - 1])


def d_sum_main_term(h: float) -> float:
    """-(1/2) h log h + (1/2) A h."""
    return -0.5 * h * math.log(h) + 0.5 * PAIR_SUM_A * h


def twin_prime_constant(p_max: int = None) -> SingularValue:
    s = pair_singular_series(2, p_max)
    return SingularValue(s.value / 2, s.tail_bound / 2, s.p_max)

"""Beatty sequences B = (floor(alpha*m + beta))_{m >= 1} with certified floors.

Membership uses the indicator identity 1_B(n) = psi_a(a*n + b) with
a = 1/alpha and b = (1 - beta)/alpha, so that a*n + b = (n + 1 - beta)/alpha.

Named constants are evaluated with mpmath at 128 fractional bits; a result
is accepted only when the value sits farther than 2^-(bits/2) from every
decision boundary (an integer for floors, 0 and a for membership),
otherwise the evaluation is repeated at 256 and then 512 bits. Exact
rational parameters never need intervals: they run on integers.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Union

import mpmath
import numpy as np
from mpmath import mp

from beattyprimes.basic.errors import InvalidParams, PrecisionExhausted
from beattyprimes.basic.my_logger import file_logger
from beattyprimes.beatty.constants import RealConstant, parse_real

PRECISION_LEVELS = (128, 256, 512)
_CHUNK = 1 << 20


@dataclass(frozen=True)
class PrecisionInterval:
    lo: mpmath.mpf
    hi: mpmath.mpf
    bits: int

    @classmethod
    def around(cls, value: mpmath.mpf, bits: int) -> 'PrecisionInterval':
        guard = mpmath.ldexp(1, -(bits // 2))
        return cls(lo=value - guard, hi=value + guard, bits=bits)

    def floor(self) -> Optional[int]:
        """floor of every point in the interval, or None if it straddles an integer."""
        k = int(mpmath.floor(self.lo))
        if self.lo == k or int(mpmath.floor(self.hi)) != k:
            return None
        return k

    def shifted(self, k: int) -> 'PrecisionInterval':
        return PrecisionInterval(lo=self.lo - k, hi=self.hi - k, bits=self.bits)


@dataclass
class PrecisionLedger:
    """How many certified evaluations needed each precision level."""
    counts: Counter = field(default_factory=Counter)

    def record(self, bits: int) -> None:
        self.counts[bits] += 1

    @property
    def max_bits(self) -> int:
        return max(self.counts, default=0)

    def escalations_beyond(self, bits: int) -> int:
        return sum(c for b, c in self.counts.items() if b > bits)


default_ledger = PrecisionLedger()


def psi(t: float, x) -> int:
    """1 if 0 < {x} <= t, else 0 (period one)."""
    if not 0 < t < 1:
        raise InvalidParams(f"psi needs 0 < t < 1, got {t}")
    frac = x - math.floor(x) if isinstance(x, (int, float)) else x - mpmath.floor(x)
    return 1 if 0 < frac <= t else 0


@dataclass(frozen=True)
class BeattyParams:
    alpha: RealConstant
    beta: RealConstant

    def __post_init__(self):
        if float(self.alpha) <= 1:
            raise InvalidParams(f"alpha must exceed 1, got {self.alpha.label}")
        if float(self.beta) < 0:
            raise InvalidParams(f"beta must be non-negative, got {self.beta.label}")

    @classmethod
    def of(cls, alpha: Union[str, float, RealConstant], beta: Union[str, float, RealConstant] = 0) -> 'BeattyParams':
        return cls(alpha=parse_real(alpha), beta=parse_real(beta))

    @property
    def exact(self) -> bool:
        return self.alpha.is_exact and self.beta.is_exact

    @property
    def a(self) -> float:
        return 1.0 / float(self.alpha)

    @property
    def b(self) -> float:
        return (1.0 - float(self.beta)) / float(self.alpha)

    @property
    def label(self) -> str:
        return f"B({self.alpha.label}, {self.beta.label})"

    def to_dict(self):
        return {'alpha': self.alpha.label, 'beta': self.beta.label}


def _work_bits(bits: int, magnitude: int) -> int:
    return bits + max(magnitude, 1).bit_length() + 16


def nth(params: BeattyParams, m: int, ledger: Optional[PrecisionLedger] = None) -> int:
    """floor(alpha*m + beta), certified."""
    if m < 1:
        raise InvalidParams(f"Beatty index starts at 1, got {m}")
    if params.exact:
        p, q = params.alpha.as_pair()
        r, s = params.beta.as_pair()
        return (p * m * s + r * q) // (q * s)

    ledger = ledger or default_ledger
    for bits in PRECISION_LEVELS:
        with mp.workprec(_work_bits(bits, m * int(float(params.alpha)) + 2)):
            y = params.alpha.value(mp.prec) * m + params.beta.value(mp.prec)
            k = PrecisionInterval.around(y, bits).floor()
        if k is not None:
            ledger.record(bits)
            return k
        file_logger.debug(f"{params.label}: nth({m}) straddles an integer at {bits} bits")
    raise PrecisionExhausted(f"{params.label}: alpha*{m}+beta indistinguishable from an integer", bits=PRECISION_LEVELS[-1])


def _before_first(params: BeattyParams, n: int, ledger: Optional[PrecisionLedger] = None) -> bool:
    """n < nth(1); the psi identity alone would also admit m <= 0."""
    if n > float(params.alpha) + float(params.beta) + 1:
        return False
    return n < nth(params, 1, ledger)


def _contains_exact(params: BeattyParams, n: int) -> bool:
    p, q = params.alpha.as_pair()
    r, s = params.beta.as_pair()
    num = q * (s * (n + 1) - r)
    den = p * s
    rem = num % den
    return rem != 0 and rem * p <= q * den and not _before_first(params, n)


def contains(params: BeattyParams, n: int, ledger: Optional[PrecisionLedger] = None) -> bool:
    """n in B, via psi_a(a*n + b) on a certified fractional part."""
    if n < 1:
        raise InvalidParams(f"membership is defined for n >= 1, got {n}")
    if params.exact:
        return _contains_exact(params, n)
    ledger = ledger or default_ledger
    # also settles n = beta - 1 and n = beta for integer beta, where {a n + b} sits exactly on 0 or a
    if _before_first(params, n, ledger):
        return False
    for bits in PRECISION_LEVELS:
        with mp.workprec(_work_bits(bits, n + 2 + int(float(params.beta)))):
            alpha = params.alpha.value(mp.prec)
            y = PrecisionInterval.around((n + 1 - params.beta.value(mp.prec)) / alpha, bits)
            a = PrecisionInterval.around(1 / alpha, bits)
            k = y.floor()
            if k is not None:
                frac = y.shifted(k)
                if frac.hi < a.lo:
                    ledger.record(bits)
                    return True
                if frac.lo > a.hi:
                    ledger.record(bits)
                    return False
        file_logger.debug(f"{params.label}: contains({n}) undecided at {bits} bits")
    raise PrecisionExhausted(f"{params.label}: fractional part of a*{n}+b too close to 0 or a", bits=PRECISION_LEVELS[-1])


def _float_margin(scale: np.ndarray) -> np.ndarray:
    # |rounding error| of float64 y = c*n + d, with c and d themselves rounded
    return (np.abs(scale) + 4.0) * 2.0 ** -48


def nth_many(params: BeattyParams, m, ledger: Optional[PrecisionLedger] = None) -> np.ndarray:
    """Vectorized nth; float64 results are kept only where the rounding margin certifies them."""
    m = np.asarray(m, dtype=np.int64)
    out = np.empty(m.shape, dtype=np.int64)
    alpha, beta = float(params.alpha), float(params.beta)
    flat_m, flat_out = m.reshape(-1), out.reshape(-1)
    for start in range(0, len(flat_m), _CHUNK):
        mm = flat_m[start:start + _CHUNK]
        y = alpha * mm.astype(np.float64) + beta
        k = np.floor(y)
        frac = y - k
        margin = _float_margin(y)
        safe = (frac > margin) & (frac < 1.0 - margin)
        res = k.astype(np.int64)
        for i in np.flatnonzero(~safe):
            res[i] = nth(params, int(mm[i]), ledger)
        flat_out[start:start + _CHUNK] = res
    return out


def contains_many(params: BeattyParams, n, ledger: Optional[PrecisionLedger] = None) -> np.ndarray:
    """Vectorized contains with the same float-screen-then-certify policy."""
    n = np.asarray(n, dtype=np.int64)
    out = np.empty(n.shape, dtype=bool)
    a, b = params.a, params.b
    flat_n, flat_out = n.reshape(-1), out.reshape(-1)
    for start in range(0, len(flat_n), _CHUNK):
        nn = flat_n[start:start + _CHUNK]
        y = a * nn.astype(np.float64) + b
        frac = y - np.floor(y)
        margin = _float_margin(y)
        safe = (frac > margin) & (frac < 1.0 - margin) & (np.abs(frac - a) > margin)
        res = (frac <= a) & (frac > 0)
        for i in np.flatnonzero(~safe):
            res[i] = contains(params, int(nn[i]), ledger)
        early = nn <= float(params.alpha) + float(params.beta) + 1
        if early.any():
            res[early & (nn < nth(params, 1, ledger))] = False
        flat_out[start:start + _CHUNK] = res
    return out


def count_members(params: BeattyParams, x: int) -> int:
    """|{n <= x : n in B}|."""
    total = 0
    for start in range(1, x + 1, _CHUNK):
        block = np.arange(start, min(start + _CHUNK, x + 1), dtype=np.int64)
        total += int(np.count_nonzero(contains_many(params, block)))
    return total


def members_up_to(params: BeattyParams, x: int) -> np.ndarray:
    """Elements of B that are <= x, ascending."""
    if x < 1:
        return np.array([], dtype=np.int64)
    m_max = int(math.ceil((x + 1) / float(params.alpha))) + 2
    values = nth_many(params, np.arange(1, m_max + 1, dtype=np.int64))
    return values[(values >= 1) & (values <= x)]

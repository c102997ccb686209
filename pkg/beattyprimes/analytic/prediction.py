"""Gap-count predictions from the L = 0 and L = 2 terms of the k-tuple expansion.

For even h the prediction for S_h(x) = #{p <= x : p# - p = h} is

    int_3^x nu^(h-1) (log u)^-2 [ S({0,h}) - (B_h + C_h)/(nu log u) + D_h/(nu log u)^2 ] du

where B_h = C_h = sum_{t<h} S0({0,t}) and D_h = sum_{t1<t2<h} S0({t1,t2}).
The L = 1 term vanishes because S0 is zero on singletons.
"""

import math
from dataclasses import dataclass, asdict
from typing import Dict, Optional

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import logsumexp

from beattyprimes.analytic.env import AnalyticEnv, nu
from beattyprimes.analytic.quadrature import adaptive_simpson, i_integral
from beattyprimes.basic import settings
from beattyprimes.basic.errors import InvalidParams
from beattyprimes.basic.util import trace
from beattyprimes.beatty.constants import parse_real
from beattyprimes.primes.sieve import pi
from beattyprimes.singular.series import pair_modified_table, pair_singular_table

_CHUNK = 4096


def default_h_max(x: float) -> int:
    """Largest even h <= (log x)^3."""
    cube = math.log(x) ** 3
    return 2 * int(cube // 2)


class GapPredictor:
    """Per-h coefficients S_h, B_h + C_h and D_h for every even h <= h_max."""

    def __init__(self, h_max: int, p_max: Optional[int] = None):
        if h_max < 2:
            raise InvalidParams(f"h_max must be >= 2, got {h_max}")
        self.h_max = int(h_max)
        self.p_max = int(p_max or settings.p_max)
        s0 = pair_modified_table(self.h_max, self.p_max)
        d = np.arange(self.h_max + 1, dtype=np.float64)
        # B_h = sum_{t=1}^{h-1} S0(t)
        cum = np.concatenate([[0.0], np.cumsum(s0)])          # cum[n] = sum_{t<n} S0(t)
        cum_d = np.concatenate([[0.0], np.cumsum(d * s0)])    # sum_{t<n} t S0(t)
        h = np.arange(self.h_max + 1)
        self.singular = pair_singular_table(self.h_max, self.p_max)
        self.b_plus_c = 2.0 * cum[h]
        # D_h = sum_{d=1}^{h-2} (h-1-d) S0(d)
        hm1 = np.maximum(h - 1, 0)
        self.d_sum = np.where(h >= 3, (h - 1) * cum[hm1] - cum_d[hm1], 0.0)

    def even(self) -> np.ndarray:
        return np.arange(2, self.h_max + 1, 2)

    def integrand(self, h: int):
        s, bc, dd = self.singular[h], self.b_plus_c[h], self.d_sum[h]

        def f(u):
            n = nu(u)
            log_u = np.log(u)
            w = n * log_u
            return n ** (h - 1) / log_u ** 2 * (s - bc / w + dd / w ** 2)
        return f

    def total_integrand(self, h_max: Optional[int] = None):
        """Sum of the integrands over even h <= h_max, as three polynomials in nu."""
        h_max = min(int(h_max or self.h_max), self.h_max)
        degree = np.zeros(h_max)
        evens = np.arange(2, h_max + 1, 2)
        coef_s, coef_bc, coef_d = degree.copy(), degree.copy(), degree.copy()
        coef_s[evens - 1] = self.singular[evens]
        coef_bc[evens - 1] = self.b_plus_c[evens]
        coef_d[evens - 1] = self.d_sum[evens]

        def f(u):
            n = nu(u)
            log_u = np.log(u)
            w = n * log_u
            return (P.polyval(n, coef_s) - P.polyval(n, coef_bc) / w + P.polyval(n, coef_d) / w ** 2) / log_u ** 2
        return f

    def predict(self, h: int, x: float, tol: float = 1e-4) -> float:
        if h < 2 or h % 2 or h > self.h_max:
            raise InvalidParams(f"h must be even in [2, {self.h_max}], got {h}")
        return float(adaptive_simpson(self.integrand(h), 3.0, float(x), tol).real)


def _check_x(x: float) -> None:
    if x < 10:
        raise InvalidParams(f"x must be >= 10, got {x}")


def predict_gap_count(h: int, x: float, p_max: Optional[int] = None, tol: float = 1e-4) -> float:
    _check_x(x)
    if h < 2 or h % 2:
        raise InvalidParams(f"h must be even and >= 2, got {h}")
    return GapPredictor(h, p_max).predict(h, x, tol)


@trace
def predict_gap_total(x: float, h_max: Optional[int] = None, p_max: Optional[int] = None,
                      tol: float = 1e-3) -> float:
    """Sum of predict_gap_count over even h <= h_max (default (log x)^3), one quadrature."""
    _check_x(x)
    h_max = int(h_max or default_h_max(x))
    predictor = GapPredictor(h_max, p_max)
    return float(adaptive_simpson(predictor.total_integrand(), 3.0, float(x), tol).real)


def truncation_log(u: float, x: float, c: float) -> float:
    """log of sum_{h > (log x)^3, 2|h} h^c nu(u)^h."""
    if c <= 0:
        raise InvalidParams(f"c must be positive, got {c}")
    if not 3 <= u <= x:
        raise InvalidParams(f"need 3 <= u <= x, got u={u}, x={x}")
    env = AnalyticEnv(u)
    start = 2 * int(math.log(x) ** 3 // 2) + 2
    pieces = []
    while True:
        h = np.arange(start, start + 2 * _CHUNK, 2, dtype=np.float64)
        logs = c * np.log(h) + h * env.log_nu
        pieces.append(logsumexp(logs))
        last = h[-1]
        log_ratio = c * math.log((last + 2) / last) + 2 * env.log_nu
        if log_ratio < 0 and logs[-1] < logsumexp(pieces) - 40:
            pieces.append(logs[-1] + log_ratio - math.log(-math.expm1(log_ratio)))
            return float(logsumexp(pieces))
        start += 2 * _CHUNK


def truncation_check(u: float, x: float, c: float) -> float:
    """sum_{h > (log x)^3, 2|h} h^c nu(u)^h (underflows to 0.0 when negligible)."""
    return math.exp(truncation_log(u, x, c))


@dataclass
class HeadlinePrediction:
    x: float
    integral_term: float
    pi_term: float

    def to_dict(self) -> Dict:
        return asdict(self)


def headline_prediction(alpha, alpha_hat, x: int, tol: float = 1e-6) -> HeadlinePrediction:
    """k = l = 0 term a * a_hat * I_0(x) beside (alpha * alpha_hat)^-1 pi(x)."""
    a = 1.0 / float(parse_real(alpha))
    a_hat = 1.0 / float(parse_real(alpha_hat))
    integral = i_integral(0.0, x, tol).real if x >= 3 else 0.0
    return HeadlinePrediction(x=float(x), integral_term=a * a_hat * integral, pi_term=a * a_hat * pi(int(x)))

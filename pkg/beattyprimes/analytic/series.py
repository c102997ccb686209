"""Direct summation of the even-h series

    R(theta, vartheta; lam)(u) = sum_{2|h} h^theta (log h)^vartheta nu(u)^h e(lam h)
    S(lam)(u)                  = sum_{2|h} S0({0,h}) nu(u)^h e(lam h)

Each sum runs until the majorant of the next term drops below
tol * (1 - nu) and the majorant ratio of consecutive terms is below one;
the remainder is bounded by the geometric series of that ratio.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import gamma

from beattyprimes.analytic.env import AnalyticEnv, e
from beattyprimes.basic.errors import InvalidParams
from beattyprimes.singular.series import pair_modified_table

_CHUNK = 4096
# bound on 2*C2 = S({0,2}), used in the |S0({0,h})| majorant
_TWO_C2 = 1.33


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    terms_used: int
    tail_bound: float

    def to_dict(self):
        return {'value_re': self.value.real, 'value_im': self.value.imag,
                'terms_used': self.terms_used, 'tail_bound': self.tail_bound}


def _sum_even(env: AnalyticEnv,
              coefficients: Callable[[np.ndarray], np.ndarray],
              log_majorant: Callable[[np.ndarray], np.ndarray],
              tol: float) -> SeriesValue:
    if tol <= 0:
        raise InvalidParams(f"tol must be positive, got {tol}")
    threshold = math.log(tol * (1.0 - env.nu))
    total = 0j
    used = 0
    start = 2
    while True:
        h = np.arange(start, start + 2 * _CHUNK, 2, dtype=np.float64)
        log_mag = log_majorant(h) + h * env.log_nu
        log_ratio = log_majorant(h + 2) - log_majorant(h) + 2 * env.log_nu
        done = np.flatnonzero((log_mag < threshold) & (log_ratio < 0))
        stop = int(done[0]) + 1 if len(done) else len(h)
        taken = h[:stop]
        total += complex(np.sum(coefficients(taken) * env.weights(taken)))
        used += stop
        if len(done):
            n = taken[-1]
            ratio = math.exp(log_ratio[stop - 1])
            tail = math.exp(log_majorant(np.array([n + 2]))[0] + (n + 2) * env.log_nu) / (1.0 - ratio)
            return SeriesValue(value=total, terms_used=used, tail_bound=tail)
        start += 2 * _CHUNK


def _check_theta(theta: float, vartheta: int) -> None:
    if not 0 <= theta <= 1:
        raise InvalidParams(f"theta must lie in [0, 1], got {theta}")
    if vartheta not in (0, 1):
        raise InvalidParams(f"vartheta must be 0 or 1, got {vartheta}")


def r_series(theta: float, vartheta: int, lam: float, u: float, tol: float = 1e-12) -> SeriesValue:
    _check_theta(theta, vartheta)
    env = AnalyticEnv(u, lam)

    def coefficients(h):
        return h ** theta * np.log(h) ** vartheta

    def log_majorant(h):
        return theta * np.log(h) + vartheta * np.log(np.log(h))

    return _sum_even(env, coefficients, log_majorant, tol)


def r00_closed_form(lam: float, u: float) -> complex:
    """sum_{2|h} z^h = z^2/(1 - z^2) with z = nu(u) e(lam)."""
    env = AnalyticEnv(u, lam)
    z = env.nu * complex(e(lam))
    return z * z / (1 - z * z)


def r_main_term(theta: float, vartheta: int, u: float) -> float:
    """lam = 0 leading term: (1/2) Gamma(1+theta) (log u)^(1+theta), times log 2 when vartheta = 1."""
    _check_theta(theta, vartheta)
    value = 0.5 * gamma(1 + theta) * math.log(u) ** (1 + theta)
    return value * math.log(2) if vartheta else value


def s_series(lam: float, u: float, p_max: int = None, tol: float = 1e-12) -> SeriesValue:
    env = AnalyticEnv(u, lam)
    if tol <= 0:
        raise InvalidParams(f"tol must be positive, got {tol}")
    # nu^h drops below tol near h = H log(1/tol); the table only grows if the majorant says otherwise
    extent = int(env.H * (10.0 - math.log(tol * (1.0 - env.nu)))) + 2
    tables = [pair_modified_table(extent, p_max)]

    def coefficients(h):
        top = int(h[-1])
        if top >= len(tables[-1]):
            tables.append(pair_modified_table(2 * top, p_max))
        return tables[-1][h.astype(np.int64)]

    def log_majorant(h):
        # S({0,h}) <= 2 C2 (h/phi(h))^2 <= 2 C2 (1 + log h)^2
        return np.log(_TWO_C2 * (1 + np.log(h)) ** 2 + 1)

    return _sum_even(env, coefficients, log_majorant, tol)


def s_main_term(u: float) -> float:
    log_u = math.log(u)
    return 0.5 * log_u - 0.5 * math.log(log_u)

"""Lemma sweeps: each suite runs one grid and returns a Table with residual columns.

Implied constants are never assumed; each suite fits the constant of its
bound on the grid and records it in the table config.
"""

import math
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from beattyprimes.analytic.quadrature import i_integral, i_main_term
from beattyprimes.analytic.series import r00_closed_form, r_main_term, r_series, s_main_term, s_series
from beattyprimes.analytic.prediction import truncation_check
from beattyprimes.basic import settings
from beattyprimes.basic.errors import UnknownSuite
from beattyprimes.basic.my_logger import logger
from beattyprimes.basic.util import trace
from beattyprimes.beatty.constants import parse_real
from beattyprimes.equidist.discrepancy import beatty_points, discrepancy
from beattyprimes.equidist.mollifier import (build_mollifier, coefficient_bound, eval_mollifier_grid,
                                             mollifier_exact)
from beattyprimes.experiment.config import parse_int
from beattyprimes.experiment.report import Table
from beattyprimes.singular.series import (d_sum_main_term, g0_pair_sum_B, g0_pair_sum_C, g0_pair_sum_D)

GROWTH_EXPONENT = 0.6


def float_list(value: Any, default: List[float]) -> List[float]:
    if value is None or value == '':
        return list(default)
    items = value if isinstance(value, (list, tuple)) else str(value).split(',')
    return [float(item) for item in items]


def int_list(value: Any, default: List[int]) -> List[int]:
    if value is None or value == '':
        return list(default)
    items = value if isinstance(value, (list, tuple)) else str(value).split(',')
    return [parse_int(item) for item in items]


def fit_constant(residuals, scales) -> float:
    """Smallest C with |residual| <= C * scale on the grid."""
    residuals, scales = np.abs(np.asarray(residuals, dtype=float)), np.asarray(scales, dtype=float)
    return float(np.max(residuals / scales)) if len(residuals) else 0.0


def loglog_slope(x, y) -> float:
    slope, _ = np.polyfit(np.log(np.asarray(x, dtype=float)), np.log(np.asarray(y, dtype=float)), 1)
    return float(slope)


def g0sums_suite(params: Dict[str, Any]) -> Table:
    """B, C and D pair sums against -(1/2) h log h + (1/2) A h."""
    p_max = parse_int(params.get('p_max', settings.p_max))
    hs = int_list(params.get('h'), [2 ** j for j in range(1, 11)])
    table = Table('g0sums', ['h', 'B_sum', 'C_sum', 'D_sum', 'main_term', 'residual', 'residual_scaled'],
                  config={'p_max': p_max})
    for h in hs:
        b, c = g0_pair_sum_B(h, p_max), g0_pair_sum_C(h, p_max)
        d = g0_pair_sum_D(h, p_max) if h >= 4 else 0.0
        main = d_sum_main_term(h)
        table.add(h, b, c, d, main, d - main, (d - main) / h ** GROWTH_EXPONENT)
    big = [row for row in table.rows if row[0] >= 4]
    table.config['fitted_C_residual'] = fit_constant([r[5] for r in big], [r[0] ** GROWTH_EXPONENT for r in big])
    table.config['fitted_C_B'] = fit_constant([r[1] for r in table.rows], [r[0] ** GROWTH_EXPONENT for r in table.rows])
    table.config['max_B_minus_C'] = max((abs(r[1] - r[2]) for r in table.rows), default=0.0)
    return table


def rst_suite(params: Dict[str, Any]) -> Table:
    """R_{theta,vartheta;lam}(u) and S_lam(u) on a (u, lam) grid."""
    p_max = parse_int(params.get('p_max', settings.p_max))
    us = float_list(params.get('u'), [1e3, 1e4, 1e5, 1e6])
    lams = float_list(params.get('lambda'), [0.0, 0.1, 0.2, 0.5, 1.0, 2.0])
    theta = float(params.get('theta', 0.0))
    vartheta = int(params.get('vartheta', 0))
    table = Table('rst', ['u', 'lambda', 'series', 'value_re', 'value_im', 'main_term', 'residual', 'tail_bound'],
                  config={'p_max': p_max, 'theta': theta, 'vartheta': vartheta})
    decay = {'R': [], 'S': []}
    closed_error = 0.0
    for u in us:
        for lam in lams:
            r = r_series(theta, vartheta, lam, u)
            s = s_series(lam, u, p_max)
            r_main = r_main_term(theta, vartheta, u) if lam == 0 else 0.0
            s_main = s_main_term(u) if lam == 0 else 0.0
            table.add(u, lam, 'R', r.value.real, r.value.imag, r_main, abs(r.value) - r_main if lam == 0 else abs(r.value), r.tail_bound)
            table.add(u, lam, 'S', s.value.real, s.value.imag, s_main, s.value.real - s_main if lam == 0 else abs(s.value), s.tail_bound)
            if theta == 0 and vartheta == 0:
                closed_error = max(closed_error, abs(r.value - r00_closed_form(lam, u)))
            if lam != 0 and abs(lam) >= 1 / math.log(u):
                decay['R'].append((u, lam, abs(r.value)))
                decay['S'].append((u, lam, abs(s.value)))
    table.config['max_closed_form_error'] = closed_error
    for name, points in decay.items():
        if points:
            lam = [abs(p[1]) for p in points]
            value = [p[2] for p in points]
            table.config[f'fitted_C_{name}_decay'] = fit_constant(value, [l ** -4 for l in lam])
            top = [p for p in points if p[0] == max(us)]
            if len({p[1] for p in top}) >= 2:
                table.config[f'{name}_decay_slope'] = loglog_slope([abs(p[1]) for p in top], [p[2] for p in top])
    return table


def integral_suite(params: Dict[str, Any]) -> Table:
    """I_lam(x) against x/log x (lam = 0) and the 1/|lam| decay."""
    xs = float_list(params.get('x'), [1e4, 1e5, 1e6])
    lams = float_list(params.get('lambda'), [0.0, 1.0, 2.0, 5.0, 10.0])
    tol = float(params.get('tol', 1e-6))
    table = Table('integral', ['x', 'lambda', 'value_re', 'value_im', 'main_term', 'residual', 'scaled'],
                  config={'tol': tol})
    decay = []
    for x in xs:
        for lam in lams:
            value = i_integral(lam, x, tol)
            if lam == 0:
                main = i_main_term(x)
                residual = value.real - main
                table.add(x, lam, value.real, value.imag, main, residual, residual / (x / math.log(x) ** 2))
            else:
                table.add(x, lam, value.real, value.imag, 0.0, abs(value), abs(value) * abs(lam))
                decay.append(abs(value) * abs(lam))
    if decay:
        table.config['fitted_C_decay'] = max(decay)
    return table


def truncation_suite(params: Dict[str, Any]) -> Table:
    """Tail sum over h > (log x)^3 of h^c nu(u)^h, scaled by x."""
    cs = float_list(params.get('c'), [1.0, 2.0])
    xs = float_list(params.get('x'), [1e3, 1e4, 1e5, 1e6])
    table = Table('truncation', ['c', 'u', 'x', 'value', 'x_times_value'])
    for c in cs:
        for x in xs:
            for u in sorted({3.0, float(x)}):
                value = truncation_check(u, x, c)
                table.add(c, u, x, value, x * value)
    table.config['fitted_K'] = max((row[4] for row in table.rows), default=0.0)
    return table


def mollifier_suite(params: Dict[str, Any]) -> Table:
    """Coefficient decay (k, |g_a(k)|, bound) plus the fitted truncation constant."""
    a = float(params.get('a', 1 / math.sqrt(2)))
    delta = float(params.get('delta', 1e-3))
    K = parse_int(params.get('K', 10 ** 4))
    n = parse_int(params.get('grid', 10 ** 4))
    spec = build_mollifier(a, delta, K)
    k = np.unique(np.geomspace(1, K, num=min(K, 200)).astype(np.int64))
    bound = coefficient_bound(k, delta)
    table = Table('mollifier', ['k', 'abs_g', 'bound'], config={'a': a, 'delta': delta, 'K': K, 'grid': n})
    for kk, g, b in zip(k.tolist(), np.abs(spec.coeffs[k + K]).tolist(), bound.tolist()):
        table.add(kk, g, b)
    all_k = np.arange(1, K + 1)
    table.config['coefficient_bound_ratio'] = float(np.max(np.abs(spec.coeffs[all_k + K]) / coefficient_bound(all_k, delta)))
    exact = mollifier_exact(spec, np.arange(n) / n)
    error = float(np.max(np.abs(eval_mollifier_grid(spec, n) - exact)))
    table.config['sup_truncation_error'] = error
    table.config['fitted_C_truncation'] = error * K * delta
    table.config['exact_range'] = [float(exact.min()), float(exact.max())]
    return table


def discrepancy_suite(params: Dict[str, Any]) -> Table:
    """D(M) of {alpha m + b} (default {m sqrt2}) with D*M/log M."""
    alpha = parse_real(params.get('alpha', 'sqrt2'))
    a = float(params.get('a', float(alpha) % 1.0))
    b = float(params.get('b', 0.0))
    ms = int_list(params.get('M'), [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])
    table = Table('discrepancy', ['M', 'D', 'D_M_over_log_M'], config={'a': a, 'b': b})
    for M in ms:
        d = discrepancy(beatty_points(a, b, M))
        table.add(M, d, d * M / math.log(M))
    table.config['fitted_C'] = max((row[2] for row in table.rows), default=0.0)
    return table


SUITES: Dict[str, Callable[[Dict[str, Any]], Table]] = {
    'g0sums': g0sums_suite,
    'rst': rst_suite,
    'integral': integral_suite,
    'truncation': truncation_suite,
    'mollifier': mollifier_suite,
    'discrepancy': discrepancy_suite,
}


@trace
def lemma_suite(name: str, params: Optional[Dict[str, Any]] = None) -> Table:
    suite = SUITES.get(name)
    if suite is None:
        raise UnknownSuite(f"unknown suite '{name}'; known: {', '.join(SUITES)}")
    logger.info(f"Running suite '{name}'")
    table = suite(dict(params or {}))
    table.config.setdefault('suite', name)
    return table

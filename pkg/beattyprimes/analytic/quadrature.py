"""Adaptive Simpson quadrature, evaluated panel-parallel with numpy.

All unresolved panels of one refinement level are evaluated in a single
vectorized call, so the integrand must accept arrays. A panel [l, r] is
accepted when |S2 - S1| <= 15 * tol * (r - l) / (b - a), where S1 is the
one-panel and S2 the two-panel Simpson estimate; accepted panels contribute
the Richardson-corrected S2 + (S2 - S1)/15.
"""

import math
from typing import Callable, Optional, Tuple

import numpy as np

from beattyprimes.analytic.env import e, nu
from beattyprimes.basic.errors import InvalidParams, ToleranceNotMet
from beattyprimes.basic.my_logger import file_logger

MAX_DEPTH = 40
MIN_PANELS = 16
_CHUNK = 1 << 16


def _refine(f: Callable, lo: np.ndarray, hi: np.ndarray, scale: float, tol: float,
            max_depth: int) -> Tuple[complex, float]:
    total = 0j
    error = 0.0
    for depth in range(max_depth):
        mid = 0.5 * (lo + hi)
        w = hi - lo
        f_lo, f_q1, f_mid, f_q3, f_hi = (f(t) for t in (lo, 0.5 * (lo + mid), mid, 0.5 * (mid + hi), hi))
        s1 = w / 6.0 * (f_lo + 4.0 * f_mid + f_hi)
        s2 = w / 12.0 * (f_lo + 4.0 * f_q1 + 2.0 * f_mid + 4.0 * f_q3 + f_hi)
        delta = s2 - s1
        ok = np.abs(delta) <= 15.0 * tol * w / scale
        total += complex(np.sum(s2[ok] + delta[ok] / 15.0))
        error += float(np.sum(np.abs(delta[ok]))) / 15.0
        if ok.all():
            return total, error
        lo, hi, mid = lo[~ok], hi[~ok], mid[~ok]
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
    raise ToleranceNotMet(f"{len(lo)} panels unresolved after {max_depth} refinements",
                          estimate=total, error=error)


def adaptive_simpson(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, tol: float = 1e-8,
                     max_panel: Optional[float] = None, max_depth: int = MAX_DEPTH) -> complex:
    """Integral of f over [a, b] to absolute tolerance tol.

    max_panel caps the width of the starting panels (oscillatory integrands).
    """
    if tol <= 0:
        raise InvalidParams(f"tol must be positive, got {tol}")
    if b < a:
        return -adaptive_simpson(f, b, a, tol, max_panel, max_depth)
    if a == b:
        return 0j
    length = b - a
    n = MIN_PANELS if max_panel is None else max(MIN_PANELS, math.ceil(length / max_panel))
    total = 0j
    error = 0.0
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        idx = np.arange(start, stop + 1, dtype=np.float64)
        edges = a + length * idx / n
        part, part_error = _refine(f, edges[:-1], edges[1:], length, tol, max_depth)
        total += part
        error += part_error
    file_logger.debug(f"adaptive_simpson [{a}, {b}]: {n} starting panels, error estimate {error:.3e}")
    return total


def i_integrand(lam: float) -> Callable[[np.ndarray], np.ndarray]:
    """u -> e(lam u) / (nu(u) log u)."""
    def f(u):
        return e(lam * u) / (nu(u) * np.log(u))
    return f


def i_integral(lam: float, x: float, tol: float = 1e-6) -> complex:
    """int_3^x e(lam u) / (nu(u) log u) du."""
    if x < 3:
        raise InvalidParams(f"x must be >= 3, got {x}")
    if x == 3:
        return 0j
    max_panel = 1.0 / (8.0 * abs(lam)) if lam else None
    return adaptive_simpson(i_integrand(lam), 3.0, float(x), tol, max_panel)


def i_main_term(x: float) -> float:
    return x / math.log(x)


def midpoint_rule(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, n: int) -> complex:
    """Composite midpoint rule with n panels (reference for refinement checks)."""
    h = (b - a) / n
    t = a + h * (np.arange(n, dtype=np.float64) + 0.5)
    return complex(h * np.sum(f(t)))

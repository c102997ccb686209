"""Smoothed interval indicator Psi_a and its truncated Fourier series.

psi_a is the 1-periodic indicator of (0, a]. Psi_a is psi_a convolved with
the triangular kernel of half-width Delta, so it equals psi_a outside the
Delta-neighbourhoods of 0 and a, stays within [0, 1], and has Fourier
coefficients

    g_a(k) = e(-k a/2) * sin(pi k a)/(pi k) * (sin(pi k Delta)/(pi k Delta))^2,   g_a(0) = a.
"""

from dataclasses import dataclass

import numpy as np

from beattyprimes.analytic.env import e
from beattyprimes.basic.errors import InvalidParams, SymmetryError

IMAG_TOLERANCE = 1e-10
_CHUNK = 64


@dataclass(frozen=True, eq=False)
class MollifierSpec:
    a: float
    delta: float
    K: int
    coeffs: np.ndarray  # g_a(k) for k = -K..K

    @property
    def k(self) -> np.ndarray:
        return np.arange(-self.K, self.K + 1)

    def coefficient(self, k: int) -> complex:
        if abs(k) > self.K:
            raise InvalidParams(f"|k| must be <= {self.K}, got {k}")
        return complex(self.coeffs[k + self.K])


def coefficients(a: float, delta: float, k: np.ndarray) -> np.ndarray:
    k = np.asarray(k, dtype=np.float64)
    safe = np.where(k == 0, 1.0, k)
    g = e(-k * a / 2) * np.sin(np.pi * k * a) / (np.pi * safe) * np.sinc(k * delta) ** 2
    return np.where(k == 0, a + 0j, g)


def coefficient_bound(k, delta: float) -> np.ndarray:
    """min{1/|k|, 1/(k^2 Delta)} for k != 0."""
    k = np.abs(np.asarray(k, dtype=np.float64))
    return np.minimum(1.0 / k, 1.0 / (k * k * delta))


def build_mollifier(a: float, delta: float, K: int) -> MollifierSpec:
    if not 0 < a < 1:
        raise InvalidParams(f"a must lie in (0, 1), got {a}")
    if not 0 < delta < 0.125 or delta > 0.5 * min(a, 1 - a):
        raise InvalidParams(f"need 0 < Delta < 1/8 and Delta <= min(a, 1-a)/2, got {delta}")
    if K * delta < 1:
        raise InvalidParams(f"need K >= 1/Delta = {1 / delta:.1f}, got {K}")
    k = np.arange(-K, K + 1)
    coeffs = coefficients(a, delta, k)
    # exact conjugate symmetry
    coeffs[:K] = np.conj(coeffs[:K:-1])
    coeffs.setflags(write=False)
    return MollifierSpec(a=float(a), delta=float(delta), K=int(K), coeffs=coeffs)


def _triangular_cdf(s: np.ndarray, delta: float) -> np.ndarray:
    out = np.where(s <= 0, (s + delta) ** 2 / (2 * delta * delta), 1 - (delta - s) ** 2 / (2 * delta * delta))
    out = np.where(s <= -delta, 0.0, out)
    return np.where(s >= delta, 1.0, out)


def mollifier_exact(spec: MollifierSpec, t) -> np.ndarray:
    """Untruncated Psi_a(t) in closed form."""
    t0 = np.mod(np.asarray(t, dtype=np.float64), 1.0)
    total = np.zeros_like(t0)
    for j in (-1, 0, 1):
        total += _triangular_cdf(t0 + j, spec.delta) - _triangular_cdf(t0 + j - spec.a, spec.delta)
    return total


def indicator(a: float, t) -> np.ndarray:
    """psi_a(t) = 1 if 0 < {t} <= a else 0."""
    t0 = np.mod(np.asarray(t, dtype=np.float64), 1.0)
    return ((t0 > 0) & (t0 <= a)).astype(np.float64)


def eval_mollifier(spec: MollifierSpec, t) -> np.ndarray:
    """Psi_{a,K}(t) = sum_{|k|<=K} g_a(k) e(k t), real part; raises SymmetryError on an imaginary residue."""
    t = np.asarray(t, dtype=np.float64)
    flat = t.ravel()
    out = np.empty(len(flat))
    k = spec.k.astype(np.float64)
    for start in range(0, len(flat), _CHUNK):
        chunk = flat[start:start + _CHUNK]
        values = e(np.mod(chunk[:, None] * k[None, :], 1.0)) @ spec.coeffs
        residue = float(np.max(np.abs(values.imag))) if len(values) else 0.0
        if residue > IMAG_TOLERANCE:
            raise SymmetryError(f"imaginary residue {residue:.3e} exceeds {IMAG_TOLERANCE}")
        out[start:start + _CHUNK] = values.real
    return out.reshape(t.shape)


def eval_mollifier_grid(spec: MollifierSpec, n: int) -> np.ndarray:
    """Psi_{a,K}(j/n) for j = 0..n-1 by one inverse FFT."""
    if n < 1:
        raise InvalidParams(f"n must be positive, got {n}")
    folded = np.zeros(n, dtype=complex)
    np.add.at(folded, np.mod(spec.k, n), spec.coeffs)
    values = n * np.fft.ifft(folded)
    residue = float(np.max(np.abs(values.imag)))
    if residue > IMAG_TOLERANCE:
        raise SymmetryError(f"imaginary residue {residue:.3e} exceeds {IMAG_TOLERANCE}")
    return values.real

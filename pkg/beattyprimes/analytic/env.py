"""Weights nu(u)^h e(lam h) shared by the R, S and T series."""

import math
from dataclasses import dataclass

import numpy as np

from beattyprimes.basic.errors import InvalidParams


def nu(u):
    """nu(u) = 1 - 1/log u, elementwise for arrays."""
    return 1.0 - 1.0 / np.log(u)


def e(t):
    """e(t) = exp(2 pi i t)."""
    return np.exp(2j * np.pi * np.asarray(t))


@dataclass(frozen=True)
class AnalyticEnv:
    """The weight nu(u)^h e(lam h) written as exp(-h/H_lam)."""
    u: float
    lam: float = 0.0

    def __post_init__(self):
        if not self.u >= 3:
            raise InvalidParams(f"u must be >= 3, got {self.u}")

    @property
    def log_u(self) -> float:
        return math.log(self.u)

    @property
    def nu(self) -> float:
        return 1.0 - 1.0 / self.log_u

    @property
    def log_nu(self) -> float:
        return math.log1p(-1.0 / self.log_u)

    @property
    def H(self) -> float:
        return -1.0 / self.log_nu

    @property
    def H_lambda(self) -> complex:
        return self.H / (1 - 2j * math.pi * self.lam * self.H)

    def weights(self, h: np.ndarray) -> np.ndarray:
        """nu^h e(lam h) = exp(-h / H_lam)."""
        h = np.asarray(h, dtype=np.float64)
        return np.exp(h * self.log_nu) * e(self.lam * h)

    def to_dict(self):
        return {'u': self.u, 'lambda': self.lam, 'nu': self.nu, 'H': self.H}

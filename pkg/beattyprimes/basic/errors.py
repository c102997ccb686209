"""Exception hierarchy shared by every module of the toolkit."""


class BeattyPrimesError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""
    exit_code = 1


class PrecisionExhausted(BeattyPrimesError):
    """A certified floor/quotient still straddles a boundary at max precision."""
    exit_code = 2

    def __init__(self, message: str, bits: int = 0):
        super().__init__(message)
        self.bits = bits


class InvalidParams(BeattyPrimesError):
    exit_code = 3


class ConfigError(BeattyPrimesError):
    exit_code = 3

    def __init__(self, message: str, path=None):
        super().__init__(message if path is None else f"{message}: {path}")
        self.path = path


class ToleranceNotMet(BeattyPrimesError):
    """Adaptive quadrature hit its refinement limit."""

    def __init__(self, message: str, estimate: complex = 0j, error: float = float('inf')):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class UnknownSuite(BeattyPrimesError):
    exit_code = 3


class SieveError(BeattyPrimesError):
    """No successor prime inside the extension window."""


class SymmetryError(BeattyPrimesError):
    """A Fourier sum that must be real left an imaginary residue."""


class RandomnessUsed(BeattyPrimesError):
    """A run declared seed-free moved a global random generator."""

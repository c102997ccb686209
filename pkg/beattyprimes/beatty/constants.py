"""Real parameters for Beatty sequences.

A parameter is either a named irrational constant, evaluated on demand to
any precision with mpmath, or a decimal string taken as the exact rational
it spells. Rational alpha breaks the equidistribution the theory relies
on; it is accepted for experiments and small worked examples only.
"""

from typing import Callable, Dict, Tuple, Union

import mpmath
from mpmath import mp
from sympy import Rational, SympifyError

from beattyprimes.basic.errors import InvalidParams

NAMED_CONSTANTS: Dict[str, Callable[[], mpmath.mpf]] = {
    'sqrt2': lambda: mp.sqrt(2),
    'sqrt3': lambda: mp.sqrt(3),
    'sqrt5': lambda: mp.sqrt(5),
    'cbrt2': lambda: mp.cbrt(2),
    'golden': lambda: mp.phi,
    'phi': lambda: mp.phi,
    'e': lambda: mp.e,
    'pi': lambda: mp.pi,
    'pi_over_2': lambda: mp.pi / 2,
    'sqrt_pi': lambda: mp.sqrt(mp.pi),
}


class RealConstant:
    """Common surface of named and exact-rational parameters."""

    label: str = ''

    @property
    def is_exact(self) -> bool:
        return False

    def value(self, bits: int) -> mpmath.mpf:
        raise NotImplementedError

    def __float__(self) -> float:
        return float(self.value(64))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RealConstant) and type(self) is type(other) and self.label == other.label

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.label))


class NamedConstant(RealConstant):

    def __init__(self, name: str):
        key = name.strip().lower()
        if key not in NAMED_CONSTANTS:
            raise InvalidParams(f"unknown constant '{name}'; known: {', '.join(sorted(NAMED_CONSTANTS))}")
        self.label = key
        self._fn = NAMED_CONSTANTS[key]

    def value(self, bits: int) -> mpmath.mpf:
        with mp.workprec(bits):
            return +self._fn()


class ExactRational(RealConstant):

    def __init__(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise InvalidParams("zero denominator")
        r = Rational(numerator, denominator)
        self.numerator = int(r.p)
        self.denominator = int(r.q)
        self.label = str(r)

    @property
    def is_exact(self) -> bool:
        return True

    def as_pair(self) -> Tuple[int, int]:
        return self.numerator, self.denominator

    def value(self, bits: int) -> mpmath.mpf:
        with mp.workprec(bits):
            return mpmath.mpf(self.numerator) / self.denominator

    def __float__(self) -> float:
        return self.numerator / self.denominator


def parse_real(spec: Union[str, int, float, RealConstant]) -> RealConstant:
    """'sqrt2', 'golden', '0.5', '1.41421356', 3 -> RealConstant."""
    if isinstance(spec, RealConstant):
        return spec
    text = str(spec).strip()
    if text.lower() in NAMED_CONSTANTS:
        return NamedConstant(text)
    try:
        r = Rational(text)
    except (TypeError, ValueError, SyntaxError, SympifyError) as e:
        raise InvalidParams(f"cannot parse real parameter '{spec}': {e}")
    if not r.is_Rational:
        raise InvalidParams(f"'{spec}' is neither a named constant nor a decimal")
    return ExactRational(int(r.p), int(r.q))

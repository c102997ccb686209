"""Experiment configuration: flat ``key = value`` files or YAML, plus overrides."""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from beattyprimes.basic import settings
from beattyprimes.basic.errors import ConfigError, InvalidParams
from beattyprimes.beatty.constants import RealConstant, parse_real
from beattyprimes.beatty.sequence import BeattyParams

FORMATS = ('csv', 'json')
_KEYS = ('alpha', 'beta', 'alpha_hat', 'beta_hat', 'checkpoints', 'x', 'p_max', 'out', 'format')


def parse_int(value: Any) -> int:
    """'1000', '1e6', 10**8 -> int."""
    if isinstance(value, int):
        return value
    text = str(value).strip().replace('_', '')
    try:
        return int(text)
    except ValueError:
        pass
    try:
        number = float(text)
    except ValueError:
        raise ConfigError(f"not an integer: '{value}'")
    if not number.is_integer():
        raise ConfigError(f"not an integer: '{value}'")
    return int(number)


def parse_checkpoints(value: Any) -> List[int]:
    if value is None or value == '':
        return []
    items = value if isinstance(value, (list, tuple)) else str(value).split(',')
    return [parse_int(item) for item in items if str(item).strip()]


@dataclass(frozen=True)
class ExperimentConfig:
    alpha: RealConstant = field(default_factory=lambda: parse_real('sqrt2'))
    beta: RealConstant = field(default_factory=lambda: parse_real(0))
    alpha_hat: RealConstant = field(default_factory=lambda: parse_real('sqrt2'))
    beta_hat: RealConstant = field(default_factory=lambda: parse_real(0))
    checkpoints: List[int] = field(default_factory=list)
    p_max: int = settings.p_max
    out: Optional[Path] = None
    format: str = 'csv'

    def __post_init__(self):
        if list(self.checkpoints) != sorted(self.checkpoints):
            raise ConfigError(f"checkpoints must be ascending: {self.checkpoints}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got '{self.format}'")
        if self.p_max < 2:
            raise ConfigError(f"p_max must be >= 2, got {self.p_max}")
        try:
            self.params
            self.params_hat
        except InvalidParams as e:
            raise ConfigError(str(e))

    @property
    def params(self) -> BeattyParams:
        return BeattyParams(self.alpha, self.beta)

    @property
    def params_hat(self) -> BeattyParams:
        return BeattyParams(self.alpha_hat, self.beta_hat)

    @property
    def density(self) -> float:
        """(alpha * alpha_hat)^-1."""
        return 1.0 / (float(self.alpha) * float(self.alpha_hat))

    @classmethod
    def from_mapping(cls, mapping: Dict[str, Any]) -> 'ExperimentConfig':
        unknown = set(mapping) - set(_KEYS)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        return cls().with_overrides(**mapping)

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        """Apply non-None overrides; strings are parsed like config file values."""
        changes: Dict[str, Any] = {}
        try:
            for key in ('alpha', 'beta', 'alpha_hat', 'beta_hat'):
                if overrides.get(key) is not None:
                    changes[key] = parse_real(overrides[key])
        except InvalidParams as e:
            raise ConfigError(str(e))
        if overrides.get('checkpoints') is not None:
            changes['checkpoints'] = parse_checkpoints(overrides['checkpoints'])
        elif overrides.get('x') is not None:
            changes['checkpoints'] = [parse_int(overrides['x'])]
        if overrides.get('p_max') is not None:
            changes['p_max'] = parse_int(overrides['p_max'])
        if overrides.get('out') is not None:
            changes['out'] = Path(overrides['out'])
        if overrides.get('format') is not None:
            changes['format'] = str(overrides['format']).lower()
        return replace(self, **changes)

    @classmethod
    def load(cls, path) -> 'ExperimentConfig':
        """Read a ``.yml``/``.yaml`` mapping (optionally under ``parameters:``) or a flat key = value file."""
        data = read_mapping(path)
        if Path(path).suffix in ('.yml', '.yaml'):
            data = {k: v for k, v in data.items() if k in _KEYS}
        return cls.from_mapping(data)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'alpha': self.alpha.label,
            'beta': self.beta.label,
            'alpha_hat': self.alpha_hat.label,
            'beta_hat': self.beta_hat.label,
            'checkpoints': list(self.checkpoints),
            'p_max': self.p_max,
            'out': str(self.out) if self.out else None,
            'format': self.format,
        }


def read_mapping(path) -> Dict[str, Any]:
    """Raw key/value pairs of a config file; YAML files may nest them under ``parameters:``."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"cannot read configuration ({e.strerror})", path=path)
    if path.suffix not in ('.yml', '.yaml'):
        return parse_flat(text, path)
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML ({e})", path=path)
    if not isinstance(data, dict):
        raise ConfigError("expected a mapping", path=path)
    if 'parameters' in data:
        data = data['parameters'] or {}
    return dict(data)


def parse_flat(text: str, path=None) -> Dict[str, str]:
    values = {}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f"line {number}: expected key = value", path=path)
        key, value = line.split('=', 1)
        values[key.strip().replace('-', '_')] = value.strip()
    return values

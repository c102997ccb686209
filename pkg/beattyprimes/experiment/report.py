"""CSV/JSON report writers and banner logging."""

import csv
import json
from dataclasses import dataclass, field, asdict, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from beattyprimes.basic.errors import ConfigError
from beattyprimes.basic.my_logger import logger
from beattyprimes.basic.util import log_banner


@dataclass
class Table:
    """Named rows with fixed columns, written as CSV (plus a JSON sidecar) or JSON."""
    name: str
    columns: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)

    def add(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"{self.name}: expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(tuple(values))

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.columns, row)) for row in self.rows]

    def write(self, out, fmt: str = 'csv') -> Path:
        out = Path(out)
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            if fmt == 'json':
                with open(out, 'w', encoding='utf-8') as f:
                    json.dump({'name': self.name, 'config': self.config, 'rows': self.records()}, f, indent=2, default=str)
                return out
            with open(out, 'w', newline='', encoding='utf-8') as f:
                writer = csv.writer(f)
                writer.writerow(self.columns)
                writer.writerows(self.rows)
            sidecar = out.with_name(out.name + '.json')
            with open(sidecar, 'w', encoding='utf-8') as f:
                json.dump({'name': self.name, 'config': self.config, 'columns': list(self.columns)}, f, indent=2, default=str)
        except OSError as e:
            raise ConfigError(f"cannot write report ({e.strerror})", path=e.filename or out)
        return out

    def print_report(self, limit: int = 20) -> None:
        rows = [(str(row[0]), ", ".join(f"{c}={_fmt(v)}" for c, v in zip(self.columns[1:], row[1:])))
                for row in self.rows[:limit]]
        if len(self.rows) > limit:
            rows.append(("...", f"{len(self.rows) - limit} more rows"))
        log_banner(f"{self.name.upper()} REPORT", {
            "Configuration:": [(k, v) for k, v in self.config.items()],
            f"Rows ({self.columns[0]}):": rows,
        })


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    return str(value)


@dataclass
class ReportRow:
    x: int
    count: int
    pi_x: int
    main_term: float
    abs_error: float
    normalized_error: float


@dataclass
class ExperimentReport:
    """Per-checkpoint counts against the (alpha alpha_hat)^-1 pi(x) main term."""
    config: Dict[str, Any] = field(default_factory=dict)
    rows: List[ReportRow] = field(default_factory=list)

    def table(self) -> Table:
        columns = [f.name for f in fields(ReportRow)]
        return Table(name='experiment', columns=columns,
                     rows=[tuple(asdict(r).values()) for r in self.rows], config=self.config)

    def write(self, out: Optional[Path] = None, fmt: Optional[str] = None) -> Optional[Path]:
        out = out or self.config.get('out')
        if not out:
            return None
        path = self.table().write(out, fmt or self.config.get('format', 'csv'))
        logger.info(f"Report written to {path}")
        return path

    def print_report(self) -> None:
        self.table().print_report()

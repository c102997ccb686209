from typing import Any, Dict, List, Optional

from beattyprimes.basic.errors import RandomnessUsed
from beattyprimes.basic.my_logger import logger
from beattyprimes.basic.util import random_state_fingerprint
from beattyprimes.experiment.config import ExperimentConfig
from beattyprimes.experiment.report import Table
from beattyprimes.workload.task import Task

BEATTY_KEYS = ('alpha', 'beta', 'alpha_hat', 'beta_hat', 'checkpoints', 'x', 'p_max', 'out', 'format')


class ReportTask(Task):
    """A task that builds one Table, logs it and writes it when `out` is set."""

    def build_table(self) -> Table:
        raise NotImplementedError(f"Task type '{self.name}' does not build a report")

    def experiment_config(self) -> ExperimentConfig:
        return ExperimentConfig().with_overrides(**{k: self.parameters.get(k) for k in BEATTY_KEYS})

    def output(self) -> Optional[str]:
        return self.param('out')

    def execute(self, results: List[Dict[str, Any]] = None) -> Any:
        seed_free = bool(self.param('seed_free'))
        before = random_state_fingerprint() if seed_free else None
        table = self.build_table()
        table.config.setdefault('task', self.name)
        if seed_free:
            if random_state_fingerprint() != before:
                raise RandomnessUsed(f"task '{self.name}' drew from a global random generator")
            table.config['seed_free'] = True
        self.print_report(table.config)
        table.print_report()
        out = self.output()
        if out:
            path = table.write(out, str(self.param('format', 'csv')).lower())
            logger.info(f"Report written to {path}")
        return table

    def print_report(self, metrics: Dict[str, Any]) -> None:
        fitted = {k: v for k, v in metrics.items() if k.startswith('fitted') or k.endswith('slope')}
        for key, value in fitted.items():
            logger.info(f"{self.name}: {key} = {value}")

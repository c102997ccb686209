from typing import Any, Dict

from beattyprimes.experiment.report import Table
from beattyprimes.experiment.suites import lemma_suite
from beattyprimes.workload.tasks.report_task import ReportTask


class LemmaTask(ReportTask):
    """Runs the suite named by the `suite` parameter."""

    suite: str = None

    def suite_params(self) -> Dict[str, Any]:
        return {k: v for k, v in self.parameters.items() if v is not None}

    def build_table(self) -> Table:
        return lemma_suite(self.suite or self.param('suite'), self.suite_params())


class DiscrepancyTask(LemmaTask):
    suite = 'discrepancy'


class MollifierTask(LemmaTask):
    suite = 'mollifier'

from beattyprimes.basic import settings
from beattyprimes.experiment.counting import run_experiment
from beattyprimes.experiment.report import Table
from beattyprimes.workload.tasks.report_task import ReportTask


class CountTask(ReportTask):
    """pi(x; B, B-hat) at every checkpoint against (alpha alpha_hat)^-1 pi(x)."""

    def build_table(self) -> Table:
        cfg = self.experiment_config()
        report = run_experiment(cfg, segment_size=int(self.param('segment_size', settings.segment_size)),
                                progress=bool(self.param('progress', False)))
        return report.table()

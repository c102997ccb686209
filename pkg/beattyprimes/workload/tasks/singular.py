from beattyprimes.basic import settings
from beattyprimes.experiment.config import parse_int
from beattyprimes.experiment.report import Table
from beattyprimes.experiment.suites import g0sums_suite, int_list
from beattyprimes.singular.series import modified_singular_series, singular_series
from beattyprimes.workload.tasks.report_task import ReportTask


class SingularTask(ReportTask):
    """Pair-sum sweep (h, B_sum, D_sum, main_term, residual), or S and S0 of one offset set."""

    def build_table(self) -> Table:
        p_max = parse_int(self.param('p_max', settings.p_max))
        offsets = self.param('offsets')
        if offsets is not None:
            H = int_list(offsets, [])
            s = singular_series(H, p_max)
            s0 = modified_singular_series(H, p_max)
            table = Table('singular', ['offsets', 'S', 'S_tail', 'S0', 'S0_tail'], config={'p_max': p_max})
            table.add(' '.join(map(str, H)), s.value, s.tail_bound, s0.value, s0.tail_bound)
            return table
        sweep = g0sums_suite({'h': self.param('h'), 'p_max': p_max})
        table = Table('singular', ['h', 'B_sum', 'D_sum', 'main_term', 'residual'], config=sweep.config)
        for h, b, _, d, main, residual, _ in sweep.rows:
            table.add(h, b, d, main, residual)
        return table

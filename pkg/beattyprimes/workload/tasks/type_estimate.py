from beattyprimes.equidist.continued_fraction import continued_fraction, type_estimate
from beattyprimes.experiment.config import parse_int
from beattyprimes.experiment.report import Table
from beattyprimes.workload.tasks.report_task import ReportTask


class TypeTask(ReportTask):
    """Continued fraction, convergents and the irrationality-type estimate of `alpha`."""

    def build_table(self) -> Table:
        x = self.param('alpha', 'sqrt2')
        n = parse_int(self.param('n', 20))
        N = parse_int(self.param('N', 10 ** 6))
        cf = continued_fraction(x, n)
        table = Table('type', ['k', 'a_k', 'p_k', 'q_k'], config={'alpha': str(x), 'n': n, 'N': N})
        for k, (a, (p, q)) in enumerate(zip(cf.terms, cf.convergents)):
            table.add(k, a, p, q)
        table.config['type_slope'] = type_estimate(x, N, method='slope')
        table.config['type_max'] = type_estimate(x, N, method='max')
        table.config['finite'] = cf.finite
        return table

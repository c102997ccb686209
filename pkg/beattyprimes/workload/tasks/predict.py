import math

from beattyprimes.analytic.prediction import GapPredictor, default_h_max, headline_prediction, predict_gap_total
from beattyprimes.basic import settings
from beattyprimes.experiment.config import parse_int
from beattyprimes.experiment.report import Table
from beattyprimes.experiment.suites import int_list
from beattyprimes.primes.pairs import gap_histogram
from beattyprimes.workload.tasks.report_task import ReportTask


class PredictTask(ReportTask):
    """Predicted S_h(x) from the L = 0, 2 terms against the sieve histogram."""

    def build_table(self) -> Table:
        x = parse_int(self.param('x', 10 ** 6))
        p_max = parse_int(self.param('p_max', settings.p_max))
        hs = int_list(self.param('h'), [2, 4, 6, 8, 10, 12])
        tol = float(self.param('tol', 1e-4))
        predictor = GapPredictor(max(hs), p_max)
        histogram = gap_histogram(x, workers=parse_int(self.param('workers', settings.workers)))

        table = Table('predict', ['h', 'predicted', 'empirical', 'ratio'], config={'x': x, 'p_max': p_max})
        for h in hs:
            predicted = predictor.predict(h, x, tol)
            empirical = histogram.counts.get(h, 0)
            table.add(h, predicted, empirical, predicted / empirical if empirical else math.nan)

        if self.param('total', False):
            h_max = default_h_max(x)
            total = predict_gap_total(x, h_max, p_max)
            empirical = histogram.even_total(h_max)
            table.config.update({'h_max': h_max, 'predicted_total': total, 'empirical_total': empirical,
                                 'total_deviation': total / empirical - 1 if empirical else math.nan})
        if self.param('headline', False):
            cfg = self.experiment_config()
            table.config['headline'] = headline_prediction(cfg.alpha, cfg.alpha_hat, x).to_dict()
        return table

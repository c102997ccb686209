import math

from beattyprimes.basic import settings
from beattyprimes.experiment.config import parse_int
from beattyprimes.experiment.counting import beatty_gap_breakdown
from beattyprimes.experiment.report import Table
from beattyprimes.primes.cache import SegmentCache
from beattyprimes.primes.pairs import gap_histogram
from beattyprimes.workload.tasks.report_task import ReportTask


class GapsTask(ReportTask):
    """Gap histogram S_h(x) beside the Beatty-filtered pi_h(x; B, B-hat).

    Even h <= (log x)^3 get one row each; the (2, 3) pair and the gaps above
    (log x)^3 are reported as the rows 'odd' and 'tail'.
    """

    def build_table(self) -> Table:
        x = parse_int(self.param('x', 10 ** 6))
        cfg = self.experiment_config().with_overrides(x=x)
        cache_dir = self.param('cache_dir', settings.cache_dir)
        cache = SegmentCache(cache_dir) if cache_dir else None
        workers = parse_int(self.param('workers', settings.workers))
        histogram = gap_histogram(x, workers=workers, cache=cache)
        beatty = beatty_gap_breakdown(cfg, x)
        threshold = math.log(x) ** 3 if x > 1 else 0.0

        def split(counts):
            body = {h: c for h, c in counts.items() if h % 2 == 0 and h <= threshold}
            odd = sum(c for h, c in counts.items() if h % 2)
            tail = sum(c for h, c in counts.items() if h % 2 == 0 and h > threshold)
            return body, odd, tail

        all_body, all_odd, all_tail = split(histogram.counts)
        bb_body, bb_odd, bb_tail = split(beatty)
        table = Table('gaps', ['h', 'S_h', 'pi_h_BB'], config={**cfg.to_dict(), 'x': x, 'h_threshold': threshold})
        for h in sorted(set(all_body) | set(bb_body)):
            table.add(h, all_body.get(h, 0), bb_body.get(h, 0))
        table.add('odd', all_odd, bb_odd)
        table.add('tail', all_tail, bb_tail)
        table.config['pi_x'] = histogram.total()
        table.config['pi_BB'] = sum(beatty.values())
        return table

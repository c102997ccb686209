import math

import numpy as np
import pytest

from beattyprimes.analytic.prediction import (GapPredictor, default_h_max, headline_prediction, predict_gap_count,
                                              predict_gap_total, truncation_check, truncation_log)
from beattyprimes.basic.errors import InvalidParams
from beattyprimes.primes.pairs import gap_histogram
from beattyprimes.primes.sieve import pi
from beattyprimes.singular.series import g0_pair_sum_B, g0_pair_sum_C, g0_pair_sum_D, pair_singular_series

EMPIRICAL_1E6 = {2: 8169, 4: 8143, 6: 13549}


def test_coefficients_match_pair_sums():
    p_max = 10 ** 5
    predictor = GapPredictor(64, p_max)
    for h in (4, 10, 30, 64):
        assert predictor.singular[h] == pytest.approx(pair_singular_series(h, p_max).value)
        assert predictor.b_plus_c[h] == pytest.approx(g0_pair_sum_B(h, p_max) + g0_pair_sum_C(h, p_max))
        assert predictor.d_sum[h] == pytest.approx(g0_pair_sum_D(h, p_max))
    assert predictor.even().tolist()[:3] == [2, 4, 6]


def test_total_integrand_is_sum_of_integrands():
    predictor = GapPredictor(40, 10 ** 5)
    u = np.array([5.0, 50.0, 5000.0])
    total = sum(predictor.integrand(h)(u) for h in predictor.even())
    assert np.allclose(predictor.total_integrand()(u), total, rtol=1e-8, atol=1e-12)


@pytest.mark.parametrize("h", [2, 4, 6])
def test_prediction_against_sieve(h):
    ratio = predict_gap_count(h, 1e6, 10 ** 5) / EMPIRICAL_1E6[h]
    assert 0.85 <= ratio <= 1.15


def test_prediction_total_close_to_pi():
    x = 10 ** 6
    total = predict_gap_total(x, p_max=10 ** 5)
    empirical = gap_histogram(x).even_total(default_h_max(x))
    assert abs(total / empirical - 1) < 0.10


def test_validation():
    with pytest.raises(InvalidParams):
        predict_gap_count(3, 1e6)
    with pytest.raises(InvalidParams):
        predict_gap_count(2, 5)
    with pytest.raises(InvalidParams):
        GapPredictor(8).predict(10, 1e5)


def test_default_h_max():
    h_max = default_h_max(1e6)
    assert h_max % 2 == 0
    assert h_max <= math.log(1e6) ** 3 < h_max + 2


def test_truncation_is_small():
    for c in (1.0, 2.0):
        assert truncation_check(1e3, 1e3, c) * 1e3 < 1.0
        assert truncation_check(3.0, 1e6, c) == 0.0 or truncation_check(3.0, 1e6, c) * 1e6 < 1e-6


def test_truncation_decreases_in_x():
    logs = [truncation_log(1e3, x, 1.0) for x in (1e3, 1e4, 1e5)]
    assert logs[0] > logs[1] > logs[2]


def test_truncation_log_against_direct_sum():
    u, x, c = 1e3, 1e3, 1.0
    log_nu = math.log1p(-1 / math.log(u))
    start = 2 * int(math.log(x) ** 3 // 2) + 2
    h = np.arange(start, start + 200000, 2, dtype=np.float64)
    direct = math.fsum(np.exp(c * np.log(h) + h * log_nu))
    assert math.exp(truncation_log(u, x, c)) == pytest.approx(direct, rel=1e-8)


def test_truncation_validation():
    with pytest.raises(InvalidParams):
        truncation_log(2.0, 1e3, 1.0)
    with pytest.raises(InvalidParams):
        truncation_log(1e4, 1e3, 1.0)
    with pytest.raises(InvalidParams):
        truncation_log(10.0, 1e3, 0.0)


def test_headline_terms():
    result = headline_prediction('sqrt2', 'sqrt2', 10 ** 6)
    assert result.pi_term == pytest.approx(pi(10 ** 6) / 2)
    # int du/(log u - 1) runs above pi(x) by about 9% at 10^6
    assert 1.0 < result.integral_term / result.pi_term < 1.15
    assert set(result.to_dict()) == {'x', 'integral_term', 'pi_term'}


@pytest.mark.slow
@pytest.mark.parametrize("h,empirical", [(2, 440312)])
def test_prediction_at_desk_scale(h, empirical):
    assert 0.95 <= predict_gap_count(h, 1e8, 10 ** 6) / empirical <= 1.05

import math

import pytest

from beattyprimes.basic.errors import UnknownSuite
from beattyprimes.experiment.suites import (SUITES, fit_constant, float_list, int_list, lemma_suite,
                                            loglog_slope)


def test_helpers():
    assert fit_constant([1.0, -4.0], [1.0, 2.0]) == pytest.approx(2.0)
    assert fit_constant([], []) == 0.0
    assert loglog_slope([1, 10, 100], [1, 100, 10000]) == pytest.approx(2.0)
    assert int_list('1e3, 10', []) == [1000, 10]
    assert int_list(None, [4]) == [4]
    assert float_list([0.5, '2'], []) == [0.5, 2.0]


def test_unknown_suite():
    with pytest.raises(UnknownSuite) as info:
        lemma_suite('bogus')
    assert info.value.exit_code == 3
    assert 'g0sums' in str(info.value)


def test_suite_names():
    assert set(SUITES) == {'g0sums', 'rst', 'integral', 'truncation', 'mollifier', 'discrepancy'}


def test_g0sums():
    table = lemma_suite('g0sums', {'h': '2,4,8,16', 'p_max': 2000})
    assert table.config['suite'] == 'g0sums'
    assert [row[0] for row in table.rows] == [2, 4, 8, 16]
    assert table.rows[0][3] == 0.0
    assert table.config['max_B_minus_C'] < 1e-6
    assert table.config['fitted_C_residual'] > 0


def test_rst():
    table = lemma_suite('rst', {'u': '1000,10000', 'lambda': '0,1', 'p_max': 2000})
    assert len(table.rows) == 8
    assert table.config['max_closed_form_error'] < 1e-9
    assert 'fitted_C_R_decay' in table.config
    s_rows = [row for row in table.rows if row[2] == 'S' and row[1] == 0.0]
    assert len(s_rows) == 2
    assert all(abs(row[6]) <= 3.5 for row in s_rows)


def test_integral():
    table = lemma_suite('integral', {'x': '1e4', 'lambda': '0,1'})
    zero, one = table.rows
    assert 2.0 < zero[6] < 3.5
    assert one[4] == 0.0
    assert 0 < table.config['fitted_C_decay'] < 1.0


def test_truncation():
    table = lemma_suite('truncation', {'c': '1', 'x': '1e3,1e4'})
    assert len(table.rows) == 4
    assert all(row[3] >= 0 for row in table.rows)
    assert table.config['fitted_K'] < 1.0


def test_mollifier():
    table = lemma_suite('mollifier', {'a': 1 / math.sqrt(2), 'delta': 0.01, 'K': 1000, 'grid': 512})
    assert table.config['coefficient_bound_ratio'] <= 1.0
    low, high = table.config['exact_range']
    assert 0.0 <= low and high <= 1.0
    assert table.config['sup_truncation_error'] < 0.05
    assert all(row[1] <= row[2] for row in table.rows)


def test_discrepancy():
    table = lemma_suite('discrepancy', {'M': '100,1000,10000'})
    assert [row[0] for row in table.rows] == [100, 1000, 10000]
    assert all(0 < row[1] <= 1 for row in table.rows)
    assert table.config['a'] == pytest.approx(math.sqrt(2) - 1)
    assert table.config['fitted_C'] < 5

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import primerange

from beattyprimes.basic.errors import InvalidParams
from beattyprimes.singular.series import (PAIR_SUM_A, OffsetSet, d_sum_main_term, g0_pair_sum_B, g0_pair_sum_C,
                                          g0_pair_sum_D, modified_singular_series, pair_modified_table,
                                          pair_singular_series, pair_singular_table, residue_count, singular_series,
                                          twin_prime_constant)


def straight_loop(H, p_max):
    """Plain Euler product, one prime at a time."""
    value = 1.0
    for p in primerange(2, p_max + 1):
        value *= (1 - len({h % p for h in H}) / p) * (1 - 1 / p) ** (-len(H))
    return value


def test_twin_prime_value():
    s = singular_series([0, 2], 10 ** 7)
    assert s.value == pytest.approx(1.3203236, abs=1e-5)
    assert twin_prime_constant(10 ** 7).value == pytest.approx(0.6601618, abs=1e-5)


def test_agrees_with_straight_loop():
    for H in ([0, 2], [0, 6], [0, 2, 6], [0, 4, 6, 10]):
        assert singular_series(H, 10 ** 4).value == pytest.approx(straight_loop(H, 10 ** 4), rel=1e-10)


def test_trivial_and_inadmissible():
    assert singular_series([0], 1000).value == 1.0
    assert singular_series([], 1000).value == 1.0
    assert singular_series([0, 1], 1000).value == 0.0
    assert singular_series([0, 2, 4], 1000).value == 0.0


def test_pair_fast_path_matches_general_product():
    p_max = 20000
    for h in (2, 4, 6, 30, 210, 1024):
        fast = pair_singular_series(h, p_max).value
        assert fast == pytest.approx(straight_loop([0, h], p_max), rel=1e-10)
    assert pair_singular_series(3, p_max).value == 0.0


def test_pair_table_matches_pair_series():
    table = pair_singular_table(200, 10 ** 5)
    assert table[0] == 1.0
    assert np.all(table[1::2] == 0.0)
    for h in (2, 12, 30, 98, 200):
        assert table[h] == pytest.approx(pair_singular_series(h, 10 ** 5).value, rel=1e-12)
    with pytest.raises(ValueError):
        table[2] = 0.0


def test_modified_series_of_small_sets():
    p_max = 10 ** 5
    assert modified_singular_series([], p_max).value == 1.0
    assert modified_singular_series([5], p_max).value == 0.0
    pair = modified_singular_series([0, 2], p_max).value
    assert pair == pytest.approx(singular_series([0, 2], p_max).value - 1.0)
    assert pair_modified_table(10, p_max)[2] == pytest.approx(pair)


def test_tail_bound_reported():
    s = singular_series([0, 2, 6], 10 ** 5)
    assert 0 < s.tail_bound < 1e-4 * s.value


def test_residue_count():
    assert residue_count([0, 2, 6], 3) == 2
    assert residue_count([0, 2, 6], 2) == 1


def test_offset_set_validation():
    with pytest.raises(InvalidParams):
        OffsetSet((2, 0))
    with pytest.raises(InvalidParams):
        OffsetSet.of(range(9))
    H = OffsetSet.of([6, 2, 0])
    assert H.offsets == (0, 2, 6)
    assert H.span == 6
    assert H.shifted(5).normalized() == H
    assert len(list(H.subsets())) == 8


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=5, unique=True),
       st.integers(min_value=-1000, max_value=1000))
def test_translation_invariance(offsets, c):
    H = OffsetSet.of(offsets)
    assert singular_series(H, 3000).value == singular_series(H.shifted(c), 3000).value


def test_pair_sums():
    assert g0_pair_sum_B(2, 10 ** 5) == 0.0
    assert g0_pair_sum_B(4, 10 ** 5) == pytest.approx(-1.6797, abs=1e-3)
    assert g0_pair_sum_D(4, 10 ** 5) == pytest.approx(-1.6797, abs=1e-3)
    with pytest.raises(InvalidParams):
        g0_pair_sum_B(3)
    with pytest.raises(InvalidParams):
        g0_pair_sum_D(2)


def test_b_and_c_sums_agree():
    for h in (2, 4, 10, 64, 128, 500):
        assert g0_pair_sum_B(h, 10 ** 5) == pytest.approx(g0_pair_sum_C(h, 10 ** 5), abs=1e-8)


def test_c_sum_matches_offset_sets():
    h, p_max = 30, 10 ** 4
    direct = math.fsum(modified_singular_series([t, h], p_max).value for t in range(1, h))
    assert g0_pair_sum_C(h, p_max) == pytest.approx(direct, abs=1e-9)


def test_d_sum_matches_double_loop():
    h, p_max = 40, 10 ** 4
    s0 = lambda t1, t2: modified_singular_series([t1, t2], p_max).value
    direct = math.fsum(s0(t1, t2) for t1 in range(1, h) for t2 in range(t1 + 1, h))
    assert g0_pair_sum_D(h, p_max) == pytest.approx(direct, abs=1e-9)


def test_pair_sum_constant():
    assert PAIR_SUM_A == pytest.approx(-0.4150927, abs=1e-7)


def test_d_sum_residual_grows_slower_than_h():
    p_max = 10 ** 5
    residuals = [abs(g0_pair_sum_D(h, p_max) - d_sum_main_term(h)) / h ** 0.6 for h in (128, 256, 512, 1024)]
    assert max(residuals) <= 2 * residuals[0] + 1


@pytest.mark.slow
def test_d_sum_residual_acceptance_range():
    p_max = 10 ** 5
    hs = [128 * 2 ** j for j in range(7)]
    scaled = [abs(g0_pair_sum_D(h, p_max) - d_sum_main_term(h)) / h ** 0.6 for h in hs]
    assert max(scaled[1:]) <= 2 * scaled[0]

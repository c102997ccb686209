import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beattyprimes.basic.errors import InvalidParams, SymmetryError
from beattyprimes.equidist.mollifier import (MollifierSpec, build_mollifier, coefficient_bound, coefficients,
                                             eval_mollifier, eval_mollifier_grid, indicator, mollifier_exact)

A = 1 / math.sqrt(2)


@pytest.fixture(scope="module")
def spec():
    return build_mollifier(A, 1e-3, 10 ** 4)


def test_zeroth_coefficient(spec):
    assert spec.coefficient(0) == pytest.approx(A)
    with pytest.raises(InvalidParams):
        spec.coefficient(10 ** 4 + 1)


def test_coefficient_bound_holds(spec):
    k = np.arange(1, spec.K + 1)
    g = np.abs(spec.coeffs[k + spec.K])
    assert np.all(g <= coefficient_bound(k, spec.delta) * (1 + 1e-12))


def test_conjugate_symmetry_is_exact(spec):
    k = np.arange(1, spec.K + 1)
    assert np.array_equal(spec.coeffs[spec.K - k], np.conj(spec.coeffs[spec.K + k]))


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.95), st.integers(min_value=1, max_value=5000))
def test_coefficients_are_hermitian(a, k):
    pair = coefficients(a, 1e-3, np.array([-k, k]))
    assert pair[0] == pytest.approx(np.conj(pair[1]), abs=1e-15)


def test_exact_form_equals_indicator_away_from_edges(spec):
    t = np.random.default_rng(7).random(10 ** 4)
    far = (np.abs(t) > spec.delta) & (np.abs(t - A) > spec.delta) & (np.abs(1 - t) > spec.delta)
    assert np.array_equal(mollifier_exact(spec, t[far]), indicator(A, t[far]))


def test_exact_form_stays_in_unit_interval(spec):
    t = np.linspace(-0.01, 1.01, 5001)
    values = mollifier_exact(spec, t)
    assert values.min() >= 0.0 and values.max() <= 1.0


def test_truncation_error_scales_like_one_over_k_delta():
    errors = []
    for K in (2000, 4000, 8000):
        spec = build_mollifier(A, 1e-3, K)
        grid = np.arange(4096) / 4096
        errors.append(float(np.max(np.abs(eval_mollifier_grid(spec, 4096) - mollifier_exact(spec, grid)))))
    fitted = [err * K * 1e-3 for err, K in zip(errors, (2000, 4000, 8000))]
    assert errors[2] < errors[0]
    assert max(fitted) < 3 * min(fitted) + 0.1


def test_grid_matches_direct_sum():
    spec = build_mollifier(A, 1e-2, 500)
    grid = np.arange(256) / 256
    assert np.allclose(eval_mollifier_grid(spec, 256), eval_mollifier(spec, grid), atol=1e-10)


def test_direct_sum_approximates_exact():
    spec = build_mollifier(0.3, 1e-2, 2000)
    t = np.array([0.1, 0.2, 0.5, 0.9])
    assert np.allclose(eval_mollifier(spec, t), mollifier_exact(spec, t), atol=0.05)


def test_broken_symmetry_raises():
    good = build_mollifier(0.3, 1e-2, 200)
    coeffs = good.coeffs.copy()
    coeffs[good.K + 5] += 1e-3j
    broken = MollifierSpec(a=good.a, delta=good.delta, K=good.K, coeffs=coeffs)
    with pytest.raises(SymmetryError):
        eval_mollifier(broken, np.array([0.13]))
    with pytest.raises(SymmetryError):
        eval_mollifier_grid(broken, 64)


def test_validation():
    with pytest.raises(InvalidParams):
        build_mollifier(1.2, 1e-3, 10 ** 4)
    with pytest.raises(InvalidParams):
        build_mollifier(A, 0.2, 10 ** 4)
    with pytest.raises(InvalidParams):
        build_mollifier(A, 1e-3, 10)
    with pytest.raises(InvalidParams):
        eval_mollifier_grid(build_mollifier(A, 1e-2, 200), 0)

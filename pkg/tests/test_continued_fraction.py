import pytest

from beattyprimes.basic.errors import InvalidParams
from beattyprimes.beatty.constants import ExactRational
from beattyprimes.equidist.continued_fraction import (continued_fraction, convergents_of, distance_to_nearest,
                                                      rational_from_quotients, type_estimate)


def test_sqrt2():
    cf = continued_fraction('sqrt2', 5)
    assert cf.terms == [1, 2, 2, 2, 2]
    assert list(cf.convergents) == [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]
    assert not cf.finite
    assert str(cf) == "[1; 2, 2, 2, 2]"


def test_golden_ratio():
    assert continued_fraction('golden', 5).terms == [1, 1, 1, 1, 1]


def test_e_pattern():
    assert continued_fraction('e', 11).terms == [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1]


def test_long_expansion_is_certified():
    terms = continued_fraction('sqrt2', 400).terms
    assert terms[0] == 1 and set(terms[1:]) == {2}
    assert set(continued_fraction('golden', 600).terms) == {1}


def test_rational_expansion_stops():
    cf = continued_fraction('1.5', 10)
    assert cf.terms == [1, 2]
    assert cf.finite
    assert continued_fraction(ExactRational(355, 113), 10).terms == [3, 7, 16]


def test_convergents_recurrence():
    assert convergents_of([3, 7, 15, 1]) == [(3, 1), (22, 7), (333, 106), (355, 113)]
    assert rational_from_quotients([3, 7, 16]).as_pair() == (355, 113)


def test_distance_to_nearest():
    from beattyprimes.beatty.constants import parse_real
    assert distance_to_nearest(parse_real('sqrt2'), 41, 29) == pytest.approx(abs(29 * 2 ** 0.5 - 41), rel=1e-9)
    assert distance_to_nearest(ExactRational(7, 5), 7, 5) == 0


def test_type_of_quadratic_irrationals():
    for x, spread in (('sqrt2', 0.05), ('golden', 0.05), ('sqrt3', 0.1)):
        assert type_estimate(x, 10 ** 6) == pytest.approx(1.0, abs=spread)
        assert type_estimate(x, 10 ** 6, method='max') >= type_estimate(x, 10 ** 6)


def test_huge_partial_quotient_inflates_type():
    liouville_like = rational_from_quotients([1, 2, 2, 2, 2, 10 ** 10, 3, 5, 7])
    assert type_estimate(liouville_like, 10 ** 6) > 2
    assert type_estimate(liouville_like, 10 ** 6, method='max') > 2


def test_validation():
    with pytest.raises(InvalidParams):
        continued_fraction('sqrt2', 0)
    with pytest.raises(InvalidParams):
        type_estimate('sqrt2', 5)
    with pytest.raises(InvalidParams):
        type_estimate('sqrt2', 100, method='median')

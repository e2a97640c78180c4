from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dtknots.bridge import (ContinuedFraction, DoubleTwist, RangeError, TwoBridgeFraction, canonicalize,
                            cf_value, classifying_fraction, crossing_number, determinant, fraction_orbit,
                            knots_equivalent, orbit_representative, parameterizations, subtractive_cf,
                            subtractive_value)

F = TwoBridgeFraction


@pytest.mark.parametrize("pair, expected", [((5, -6), F(29, 6)), ((2, 4), F(9, 4)), ((1, -2), F(1, 0))])
def test_classifying_fraction(pair, expected):
    assert classifying_fraction(*pair) == expected


def test_unknot_fraction():
    assert classifying_fraction(1, -2).is_unknot


@pytest.mark.parametrize("terms, expected", [
    ([5, -4, 1, -2], F(9, 2)),
    ([3, 3, -1, 5], F(25, 7)),
    ([6, -2, 1, -4], F(9, 2)),
])
def test_cf_value(terms, expected):
    assert cf_value(terms) == expected


def test_cf_value_unlink():
    f = cf_value([2, 1, -1, 3])
    assert f.p == 0 and f.is_unlink


def test_cf_value_zero_term_passes_through():
    # [a, 0, b] = a + b
    assert cf_value([7, 0, 1, 6]) == classifying_fraction(8, 6)


def _exact_cf(terms):
    v = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        v = a + 1 / v
    return v


@given(st.lists(st.integers(1, 9), min_size=1, max_size=6))
def test_cf_value_matches_fraction_arithmetic(terms):
    v = _exact_cf(terms)
    assert cf_value(terms) == F.from_pair(v.numerator, v.denominator)


@pytest.mark.parametrize("f, terms", [(F(25, 18), (2, 2, 3, 4)), (F(9, 4), (3, 2, 2, 2)), (F(3, 1), (3,))])
def test_subtractive_cf(f, terms):
    assert subtractive_cf(f).terms == terms


@given(st.integers(2, 400).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p - 1))))
def test_subtractive_roundtrip(pq):
    p, q = pq
    f = F.from_pair(p, q)
    assert subtractive_value(subtractive_cf(f).terms) == f


def test_subtractive_terms_validated():
    with pytest.raises(ValueError):
        ContinuedFraction((3, 1), "subtractive")


@pytest.mark.parametrize("f, orbit", [
    (F(9, 2), {F(9, 2), F(9, 5), F(9, 7), F(9, 4)}),
    (F(5, 2), {F(5, 2), F(5, 3)}),
    (F(25, 7), {F(25, 7), F(25, 18)}),
])
def test_fraction_orbit(f, orbit):
    assert fraction_orbit(f) == orbit


@pytest.mark.parametrize("a, b, same", [
    (F(9, 2), F(9, 4), True),
    (F(29, 6), F(29, 23), True),
    (F(5, 2), F(5, 1), False),
])
def test_knots_equivalent(a, b, same):
    assert knots_equivalent(a, b) is same


@pytest.mark.parametrize("raw, canon", [((5, -2), (4, 2)), ((-3, -8), (3, 8)), ((2, 7), (7, 2)), ((2, 12), (12, 2))])
def test_canonicalize(raw, canon):
    assert canonicalize(raw).pair == canon


def test_canonicalize_rejects_links():
    with pytest.raises(ValueError):
        canonicalize((3, 3))


def test_canonicalize_unknot_and_torus():
    assert canonicalize((1, -2)).unknot
    assert canonicalize((2, -1)).unknot
    assert canonicalize((1, 6)).torus


def test_range_error():
    with pytest.raises(RangeError):
        canonicalize((2**130, 2))


@given(st.integers(1, 60), st.integers(-30, 30).map(lambda v: 2 * v).filter(lambda v: v))
def test_canonical_is_same_knot(m, n):
    c = canonicalize((m, n))
    assert knots_equivalent(classifying_fraction(m, n), classifying_fraction(*c.pair))
    for pair in parameterizations(c):
        assert knots_equivalent(classifying_fraction(*pair), classifying_fraction(*c.pair))


@given(st.integers(2, 60), st.integers(-30, 30).map(lambda v: 2 * v).filter(lambda v: v))
def test_canonicalize_idempotent(m, n):
    c = canonicalize((m, n))
    assert canonicalize(c).pair == c.pair


def test_orbit_representative_is_orbit_min():
    f = F(29, 6)
    assert orbit_representative(f) == min(fraction_orbit(f))


@pytest.mark.parametrize("pair, d", [((5, 14), 71), ((2, 4), 9), ((5, -6), 29)])
def test_determinant(pair, d):
    assert determinant(pair) == d


@pytest.mark.parametrize("pair, c", [((3, 4), 7), ((5, -6), 10), ((12, 2), 14)])
def test_crossing_number(pair, c):
    assert crossing_number(pair) == c


def test_double_twist_pair():
    assert DoubleTwist(3, 8).pair == (3, 8)

# tests/test_sequences.py
from fractions import Fraction

import pytest

from arith.integers import v2
from arith.ratfunc import RatFunc
from sequences.delannoy import (
    DelannoyIterator, delannoy_number, delannoy_number_squares, delannoy_poly_at, delannoy_poly_direct,
    delannoy_sequence, delannoy_term, large_schroder_number, schroder_poly_at, schroder_poly_via_delannoy,
    sun_binomial_sum, sun_weighted_sum,
)
from sequences.schmidt import apery_number, schmidt_poly
from sequences.sequence_spec import SequenceFamily, SequenceSpec
from sequences.trinomial import trinomial, trinomial_direct, trinomial_sequence
from utils.exceptions import SequenceException, SequenceSpecException


def test_central_delannoy_numbers():
    assert delannoy_sequence(6, 1) == [1, 3, 13, 63, 321, 1683]
    assert delannoy_number(4) == 321


def test_large_schroder_numbers():
    assert [large_schroder_number(n) for n in range(6)] == [1, 2, 6, 22, 90, 394]


@pytest.mark.parametrize("z", [-3, -1, 0, 2, 5, Fraction(1, 3)])
def test_recurrence_matches_binomial_sum(z):
    for n in range(25):
        assert delannoy_poly_at(n, z) == delannoy_poly_direct(n, z)


def test_signed_stream():
    assert DelannoyIterator(1, -1).take(5) == [1, -3, 13, -63, 321]


def test_symbolic_stream():
    z = RatFunc.z()
    d2 = DelannoyIterator(z).nth(2)
    assert d2 == 6 * z * z + 6 * z + 1
    assert d2.evaluate(1) == 13


def test_squares_formula_and_terms():
    for n in range(30):
        assert delannoy_number_squares(n) == delannoy_number(n)
    assert sum(delannoy_term(4, k) for k in range(5)) == 321


def test_delannoy_schroder_identity():
    for n in range(1, 20):
        for z in (1, 2, -3):
            assert schroder_poly_via_delannoy(n, z) == schroder_poly_at(n, z)


def test_sun_identity():
    for n in range(1, 20):
        for z in (1, -2, 3):
            assert sun_weighted_sum(n, z) == sun_binomial_sum(n, z)


def test_delannoy_term_valuation_at_power_of_two():
    # 2-адическое нормирование слагаемых для n = 2^a + 1
    for a in range(2, 7):
        n = 2 ** a + 1
        for k in range(2, n + 1):
            assert v2(delannoy_term(n, k)) >= a + 2


def test_negative_index_rejected():
    with pytest.raises(SequenceException):
        delannoy_poly_at(-1, 1)
    with pytest.raises(SequenceException):
        DelannoyIterator(1, 0)


def test_trinomial_coefficients():
    # центральные трёхчленные коэффициенты
    assert trinomial_sequence(7, 1, 1) == [1, 1, 3, 7, 19, 51, 141]
    # T_n(2, 1) = C(2n, n)
    assert trinomial_sequence(6, 2, 1) == [1, 2, 6, 20, 70, 252]
    for b in range(-3, 4):
        for c in range(-3, 4):
            for n in range(15):
                assert trinomial(n, b, c) == trinomial_direct(n, b, c)


def test_schmidt_polynomials():
    assert [schmidt_poly(1, n, 1) for n in range(5)] == [1, 3, 13, 63, 321]
    assert [apery_number(n) for n in range(5)] == [1, 5, 73, 1445, 33001]
    with pytest.raises(SequenceException):
        schmidt_poly(0, 3, 1)


def test_sequence_spec():
    spec = SequenceSpec(family=SequenceFamily.DELANNOY)
    assert spec.terms(range(5)) == [1, 3, 13, 63, 321]
    assert spec.terms([4, 0]) == [321, 1]
    signed = SequenceSpec(family=SequenceFamily.TRINOMIAL, b=1, c=1, epsilon=-1)
    assert signed.terms(range(5)) == [1, -1, 3, -7, 19]
    assert SequenceSpec(family=SequenceFamily.SCHRODER).term(4) == 90
    with pytest.raises(SequenceSpecException):
        SequenceSpec(family=SequenceFamily.DELANNOY, epsilon=2)


def test_delannoy_term_exact_valuation():
    # T(2^a+1, k) = C(2^a+1, k)^2 2^k, C(2^a+1, k) = (2^a+1)/k * C(2^a, k-1)
    for a in range(1, 9):
        n = 2 ** a + 1
        for k in range(2, n + 1):
            assert v2(delannoy_term(n, k)) == 2 * a + k - 2 * (v2(k - 1) + v2(k))


def test_trinomial_specializes_to_delannoy():
    for z in range(-5, 6):
        stream = DelannoyIterator(z)
        for n in range(31):
            assert trinomial(n, 2 * z + 1, z * z + z) == next(stream)


def test_long_recurrence_matches_binomial_sum():
    for z in (-5, -2, 1, 3, Fraction(-1, 2)):
        values = DelannoyIterator(z).take(201)
        for n in (0, 1, 2, 57, 128, 200):
            assert values[n] == delannoy_poly_direct(n, z)


def test_symbolic_recurrence_matches_binomial_sum():
    z = RatFunc.z()
    values = DelannoyIterator(z).take(41)
    for n in range(41):
        assert values[n] == delannoy_poly_direct(n, z)


def test_delannoy_schroder_identity_wide():
    for z in range(-5, 6):
        if z == 0:
            continue
        for n in range(1, 101):
            assert schroder_poly_via_delannoy(n, z) == schroder_poly_at(n, z)


def test_sun_identity_wide():
    for z in range(-5, 6):
        for n in range(1, 51):
            assert sun_weighted_sum(n, z) == sun_binomial_sum(n, z)


def test_delannoy_special_values():
    for k, (at_zero, at_minus_one) in enumerate(zip(delannoy_sequence(40, 0), delannoy_sequence(40, -1))):
        assert at_zero == 1
        assert at_minus_one == (-1) ** k


def test_sequence_spec_validation():
    spec = SequenceSpec(family="delannoy", z=Fraction(4, 2))
    assert spec.z == 2 and isinstance(spec.z, int)
    assert SequenceSpec(family=SequenceFamily.DELANNOY, z=Fraction(1, 2)).term(2) == Fraction(11, 2)
    with pytest.raises(SequenceSpecException):
        SequenceSpec(family=SequenceFamily.SCHMIDT, r=0)
    with pytest.raises(SequenceSpecException):
        SequenceSpec(family="fibonacci")
    with pytest.raises(SequenceSpecException):
        SequenceSpec(family=SequenceFamily.DELANNOY, z="x")
    with pytest.raises(ValueError):
        SequenceSpec(family=SequenceFamily.DELANNOY, epsilon=0)

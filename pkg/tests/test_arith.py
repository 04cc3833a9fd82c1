# tests/test_arith.py
from fractions import Fraction

import pytest
import sympy

from arith.integers import (
    binomial, binomial_row, is_prime, legendre, mod_inverse, mod_pow, odd_primes_in, v2,
)
from arith.ratfunc import RatFunc
from arith.zpoly import Z, ZPoly
from utils.exceptions import DomainError, PoleError


# --- integers ---
def test_mod_pow_and_inverse():
    assert mod_pow(3, 200, 13) == pow(3, 200, 13)
    assert mod_pow(-2, 3, 7) == (-8) % 7
    assert mod_inverse(3, 7) == 5
    with pytest.raises(DomainError):
        mod_inverse(4, 8)
    with pytest.raises(DomainError):
        mod_pow(2, -1, 5)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97, 199])
def test_legendre_matches_sympy(p):
    for a in range(-20, 21):
        expected = 0 if a % p == 0 else sympy.legendre_symbol(a % p, p)
        assert legendre(a, p) == expected


def test_legendre_rejects_even_and_small():
    for p in (1, 2, 4):
        with pytest.raises(DomainError):
            legendre(1, p)


def test_is_prime_matches_sympy():
    for n in range(0, 2000):
        assert is_prime(n) == sympy.isprime(n)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)  # сильное псевдопростое по 2, 3, 5, 7


def test_odd_primes_in():
    assert odd_primes_in(range(1, 20)) == [3, 5, 7, 11, 13, 17, 19]


def test_v2():
    assert v2(1) == 0
    assert v2(48) == 4
    assert v2(-12) == 2
    with pytest.raises(DomainError):
        v2(0)


def test_mod_pow_matches_repeated_multiplication():
    for modulus in (1, 2, 7, 16, 97, 1000):
        for base in range(-6, 7):
            acc = 1
            for exp in range(40):
                assert mod_pow(base, exp, modulus) == acc % modulus
                acc *= base


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_legendre_is_multiplicative(p):
    for a in range(-p, 2 * p):
        for b in range(0, p + 3):
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_v2_is_additive_on_products():
    for m in range(1, 130):
        for n in range(-65, 66):
            if n:
                assert v2(m * n) == v2(m) + v2(n)


def test_binomials():
    assert list(binomial_row(5)) == [1, 5, 10, 10, 5, 1]
    assert binomial(10, 3) == 120
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0


# --- ZPoly ---
def test_zpoly_arithmetic_and_printing():
    p = (Z + 1) ** 2
    assert p.coeffs == (1, 2, 1)
    assert p.degree == 2
    assert str(p) == "z^2 + 2*z + 1"
    assert ZPoly.zero().degree is None
    assert (p - p).is_zero()
    assert p.shift(-1) == Z ** 2


def test_zpoly_divmod_and_gcd():
    a = (Z - 1) * (Z + 2) * (Z + 3)
    b = (Z + 2) * (4 * Z + 9)
    q, r = a.divmod(Z + 2)
    assert r.is_zero()
    assert q == (Z - 1) * (Z + 3)
    assert ZPoly.gcd(a, b) == Z + 2
    assert ZPoly.lcm(Z * 2, Z ** 2 - Z) == Z ** 2 - Z
    assert ZPoly.gcd(ZPoly.zero(), ZPoly.zero()).is_zero()
    with pytest.raises(DomainError):
        a.divmod(ZPoly.zero())


def test_zpoly_rational_roots():
    p = (2 * Z - 1) * (Z + 3) * Z
    assert p.rational_roots() == [Fraction(-3), Fraction(0), Fraction(1, 2)]
    assert p.nonnegative_integer_roots() == [0]
    assert (Z ** 2 + 1).rational_roots() == []


def test_zpoly_evaluate_mod():
    p = 4 * Z + 9
    assert p.evaluate_mod(5, 7) == 29 % 7
    with pytest.raises(DomainError):
        (Z * Fraction(1, 2)).evaluate_mod(1, 5)


# --- RatFunc ---
def test_ratfunc_normalization():
    z = RatFunc.z()
    f = (z * z - 1) / (z - 1)
    assert f == z + 1
    assert f.is_polynomial()
    g = RatFunc(2 * Z, 4 * Z + 4)
    assert g.denominator == Z + 1
    assert g.numerator == Z * Fraction(1, 2)


def test_ratfunc_matches_sympy():
    z = RatFunc.z()
    zs = sympy.Symbol("z")
    f = (4 * z + 9) / z ** 2 - 1 / (z + 1)
    expr = (4 * zs + 9) / zs ** 2 - 1 / (zs + 1)
    for point in (1, 2, -3, Fraction(5, 7)):
        assert f.evaluate(point) == Fraction(str(expr.subs(zs, sympy.Rational(str(point)))))


def test_ratfunc_pole_and_mod():
    z = RatFunc.z()
    c2 = (4 * z + 9) / z ** 2
    with pytest.raises(PoleError):
        c2.evaluate(0)
    assert c2.evaluate_mod(2, 7) == (17 * pow(4, -1, 7)) % 7
    with pytest.raises(PoleError):
        c2.evaluate_mod(7, 7)


def test_ratfunc_printing():
    z = RatFunc.z()
    assert str(1 / z) == "1/z"
    assert str(-(z + 1).inverse()) == "-1/(z + 1)"
    assert str(1 / (4 * z)) == "1/(4*z)"
    assert str((4 * z + 9) / z ** 2) == "(4*z + 9)/z^2"
    assert str(RatFunc(Z * Fraction(1, 2), Z + 1)) == "z/(2*z + 2)"
    assert str(RatFunc.constant(Fraction(-3, 4))) == "-3/4"


def test_ratfunc_normal_form_is_idempotent():
    z = RatFunc.z()
    samples = [
        (z * z - 1) / (2 * z - 2),
        (4 * z + 9) / z ** 2,
        -(4 * z - 5) / (z + 1) ** 2,
        RatFunc(Z * 6, Z * Z * 4 + Z * 2),
        RatFunc.constant(Fraction(7, 3)),
    ]
    for f in samples:
        again = RatFunc(f.numerator, f.denominator)
        assert again == f
        assert str(again) == str(f)
        assert hash(again) == hash(f)
        assert again.denominator.leading_coefficient() == 1
        num, den = f.integer_parts()
        assert num.is_integral() and den.is_integral()
        assert den.leading_coefficient() > 0
        assert RatFunc(num, den) == f

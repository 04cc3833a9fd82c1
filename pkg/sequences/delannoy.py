# sequences/delannoy.py
"""
Многочлены Деланноя D_n(z), большие многочлены Шрёдера S_n(z)
и вспомогательные тождества. Для каждой величины есть путь через
рекурсию и независимый путь через биномиальную сумму.
"""
from fractions import Fraction
from typing import Any, List

from arith.integers import binomial, binomial_row
from sequences.recurrence import ThreeTermIterator, exact_div
from utils.exceptions import SequenceException

Ring = Any  # int | Fraction | RatFunc


def _check_n(n: int) -> None:
    if n < 0:
        raise SequenceException(f"Индекс должен быть неотрицательным, получено {n}")


def _check_epsilon(epsilon: int) -> None:
    if epsilon not in (1, -1):
        raise SequenceException(f"epsilon должен быть +1 или -1, получено {epsilon}")


class DelannoyIterator(ThreeTermIterator):
    """
    Поток F_k(z) = eps^k D_k(z) по рекурсии
    (n+1) F_{n+1} = eps (2n+1)(2z+1) F_n - n F_{n-1}.
    """

    def __init__(self, z: Ring, epsilon: int = 1):
        _check_epsilon(epsilon)
        b = epsilon * (2 * z + 1)
        super().__init__(b, b * 0 + 1)
        self.z = z
        self.epsilon = epsilon


def delannoy_poly_at(n: int, z: Ring) -> Ring:
    """D_n(z) по рекурсии (путь по умолчанию)."""
    _check_n(n)
    return DelannoyIterator(z).nth(n)


def delannoy_poly_direct(n: int, z: Ring) -> Ring:
    """D_n(z) = sum_k C(n,k) C(n+k,k) z^k напрямую."""
    _check_n(n)
    total = z * 0
    zk = z * 0 + 1
    t = 1  # C(n,k) C(n+k,k)
    for k in range(n + 1):
        total = total + t * zk
        t = t * (n - k) * (n + k + 1) // ((k + 1) * (k + 1))
        zk = zk * z
    return total


def delannoy_sequence(count: int, z: Ring, epsilon: int = 1) -> List[Ring]:
    """Первые count членов eps^k D_k(z)."""
    return DelannoyIterator(z, epsilon).take(count)


def delannoy_number(n: int) -> int:
    """Центральное число Деланноя D_n = D_n(1)."""
    return delannoy_poly_at(n, 1)


def delannoy_number_squares(n: int) -> int:
    """Альтернативная формула D_n = sum_k C(n,k)^2 2^k."""
    _check_n(n)
    return sum(c * c << k for k, c in enumerate(binomial_row(n)))


def delannoy_term(n: int, k: int) -> int:
    """T(n, k) = C(n,k)^2 2^k -- слагаемое альтернативной формулы."""
    return binomial(n, k) ** 2 << k


def schroder_poly_at(n: int, z: Ring) -> Ring:
    """
    Большой многочлен Шрёдера S_n(z) = sum_k C(n,k) C(n+k,k) z^k / (k+1).
    C(n,k) C(n+k,k) / (k+1) = C(n+k, 2k) * Catalan(k) -- целое.
    """
    _check_n(n)
    total = z * 0
    zk = z * 0 + 1
    t = 1
    for k in range(n + 1):
        total = total + exact_div(t, k + 1) * zk
        t = t * (n - k) * (n + k + 1) // ((k + 1) * (k + 1))
        zk = zk * z
    return total


def schroder_poly_via_delannoy(n: int, z: Ring) -> Ring:
    """S_n(z) = (D_{n+1}(z) - D_{n-1}(z)) / (2z(2n+1)) для n >= 1, z != 0."""
    if n < 1:
        raise SequenceException("Формула через D_{n+-1} требует n >= 1")
    it = DelannoyIterator(z)
    d_prev = it.nth(n - 1)
    it.nth(n)
    d_next = it.nth(n + 1)
    diff = d_next - d_prev
    den = 2 * z * (2 * n + 1)
    if isinstance(diff, int) and isinstance(den, int):
        return exact_div(diff, den)
    return diff / den


def large_schroder_number(n: int) -> int:
    """n-е большое число Шрёдера S_n(1)."""
    return schroder_poly_at(n, 1)


def sun_weighted_sum(n: int, z: Ring) -> Ring:
    """(1/n) sum_{k<n} (2k+1) D_k(z), вычисленное по определению."""
    if n < 1:
        raise SequenceException("Требуется n >= 1")
    total = z * 0
    for k, d in enumerate(DelannoyIterator(z).take(n)):
        total = total + (2 * k + 1) * d
    if isinstance(total, int):
        return exact_div(total, n)
    return total / n


def sun_binomial_sum(n: int, z: Ring) -> Ring:
    """sum_{k<n} C(n,k+1) C(n+k,k) z^k -- правая часть тождества Суня."""
    if n < 1:
        raise SequenceException("Требуется n >= 1")
    total = z * 0
    zk = z * 0 + 1
    for k in range(n):
        total = total + binomial(n, k + 1) * binomial(n + k, k) * zk
        zk = zk * z
    return total

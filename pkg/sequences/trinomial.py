# sequences/trinomial.py
"""
Обобщённые центральные трёхчленные коэффициенты
T_n(b, c) = sum_k C(n, 2k) C(2k, k) b^{n-2k} c^k.
"""
from typing import List

from arith.integers import binomial
from sequences.recurrence import ThreeTermIterator
from utils.exceptions import SequenceException


class TrinomialIterator(ThreeTermIterator):
    """Поток T_0(b,c), T_1(b,c), ... по трёхчленной рекурсии."""

    def __init__(self, b: int, c: int):
        super().__init__(b, b * b - 4 * c)
        self.b = b
        self.c = c


def trinomial(n: int, b: int, c: int) -> int:
    """T_n(b, c) по рекурсии."""
    if n < 0:
        raise SequenceException(f"Индекс должен быть неотрицательным, получено {n}")
    return TrinomialIterator(b, c).nth(n)


def trinomial_direct(n: int, b: int, c: int) -> int:
    """T_n(b, c) по определению (биномиальная сумма)."""
    if n < 0:
        raise SequenceException(f"Индекс должен быть неотрицательным, получено {n}")
    return sum(
        binomial(n, 2 * k) * binomial(2 * k, k) * b ** (n - 2 * k) * c ** k
        for k in range(n // 2 + 1)
    )


def trinomial_sequence(count: int, b: int, c: int) -> List[int]:
    return TrinomialIterator(b, c).take(count)

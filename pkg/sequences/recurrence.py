# sequences/recurrence.py
"""
Потоковый генератор для трёхчленной рекурсии центральных трёхчленных
коэффициентов:

    (n+1) T_{n+1} = (2n+1) b T_n - n (b^2 - 4c) T_{n-1},   T_0 = 1, T_1 = b.

Одна реализация работает над int, Fraction и RatFunc: кольцо
определяется типом b. Хранятся только два последних члена.
"""
from fractions import Fraction
from typing import Any, List

from utils.exceptions import SequenceException


def exact_div(x: Any, d: int) -> Any:
    """Точное деление на целое: для int проверяется делимость."""
    if isinstance(x, int):
        q, r = divmod(x, d)
        if r:
            raise SequenceException(f"Неточное целочисленное деление {x} / {d}")
        return q
    return x / d


class ThreeTermIterator:
    """Итератор T_0, T_1, ... ; состояние -- два последних члена."""

    def __init__(self, b: Any, disc: Any):
        """
        Args:
            b: Коэффициент b (int, Fraction или RatFunc).
            disc: b^2 - 4c в том же кольце.
        """
        self._b = b
        self._disc = disc
        self._n = -1
        self._prev: Any = 0
        self._cur: Any = 1

    @property
    def index(self) -> int:
        """Индекс последнего выданного члена (-1 до первого next)."""
        return self._n

    def __iter__(self) -> "ThreeTermIterator":
        return self

    def __next__(self) -> Any:
        n = self._n
        if n == -1:
            self._n = 0
            self._cur = self._one_like(self._b)
            return self._cur
        if n == 0:
            nxt = self._b
        else:
            nxt = exact_div((2 * n + 1) * self._b * self._cur - n * self._disc * self._prev, n + 1)
        self._prev, self._cur = self._cur, nxt
        self._n = n + 1
        return nxt

    @staticmethod
    def _one_like(value: Any) -> Any:
        if isinstance(value, int):
            return 1
        if isinstance(value, Fraction):
            return Fraction(1)
        return value * 0 + 1

    def take(self, count: int) -> List[Any]:
        """Следующие count членов списком."""
        return [next(self) for _ in range(count)]

    def nth(self, n: int) -> Any:
        """Член с индексом n (итератор продвигается до него)."""
        if n < 0:
            raise SequenceException(f"Отрицательный индекс {n}")
        if n < self._n:
            raise SequenceException("Итератор уже прошёл запрошенный индекс")
        value = self._cur
        while self._n < n:
            value = next(self)
        return value

# verify/sums.py
"""
Общая левая часть сравнений: sum_{k<n} eps^k (2k+1)^e D_k(z),
e = 2v (чётный случай) или 2v + 1 (нечётный).
"""
from enum import Enum
from typing import Optional

from sequences.delannoy import DelannoyIterator
from utils.exceptions import DomainError


class PowerParity(Enum):
    EVEN = "even"
    ODD = "odd"


def sum_weighted(n: int, v: int, epsilon: int, z: int,
                 power_parity: PowerParity = PowerParity.EVEN,
                 modulus: Optional[int] = None) -> int:
    """
    Сумма потоком по рекурсии, без хранения всех членов.

    Args:
        modulus: Модуль; None -- точная целая сумма.

    Returns:
        Вычет в [0, modulus) или точное значение.
    """
    if n < 1:
        raise DomainError(f"n должно быть >= 1, получено {n}")
    if v < 0:
        raise DomainError(f"v должно быть >= 0, получено {v}")
    if modulus is not None and modulus < 1:
        raise DomainError(f"Модуль должен быть >= 1, получено {modulus}")
    exponent = 2 * v if PowerParity(power_parity) is PowerParity.EVEN else 2 * v + 1

    total = 0
    stream = DelannoyIterator(z, epsilon)
    for k in range(n):
        f = next(stream)
        if modulus is None:
            total += (2 * k + 1) ** exponent * f
        else:
            total = (total + pow(2 * k + 1, exponent, modulus) * f) % modulus
    return total

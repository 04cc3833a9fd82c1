# sequences/schmidt.py
"""
Многочлены Шмидта S_n^{(r)}(z) = sum_k C(n,k)^r C(n+k,k)^r z^k.
r = 1 -- многочлены Деланноя, r = 2 -- многочлены Апери.
Только генерация значений: сравнения для r >= 2 не проверяются.
"""
from typing import Any

from utils.exceptions import SequenceException


def schmidt_poly(r: int, n: int, z: Any) -> Any:
    """S_n^{(r)}(z) прямой суммой."""
    if r < 1:
        raise SequenceException(f"Порядок r должен быть >= 1, получено {r}")
    if n < 0:
        raise SequenceException(f"Индекс должен быть неотрицательным, получено {n}")
    total = z * 0
    zk = z * 0 + 1
    t = 1  # C(n,k) C(n+k,k)
    for k in range(n + 1):
        total = total + t ** r * zk
        t = t * (n - k) * (n + k + 1) // ((k + 1) * (k + 1))
        zk = zk * z
    return total


def apery_number(n: int) -> int:
    """Число Апери A_n = S_n^{(2)}(1)."""
    return schmidt_poly(2, n, 1)

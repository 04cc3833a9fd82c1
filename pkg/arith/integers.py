# arith/integers.py
"""
Целочисленная теория чисел: символ Лежандра, модульное возведение в степень,
детерминированный тест Миллера-Рабина, 2-адическое нормирование.
Все функции чистые и работают с int произвольной длины.
"""
from math import comb
from typing import Iterator, List

from utils.exceptions import DomainError

# Первые 13 простых: детерминированный набор свидетелей для n < 3.317e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """
    Возводит base в степень exp по модулю modulus.

    Args:
        base: Основание (любого знака).
        exp: Показатель, exp >= 0.
        modulus: Модуль, modulus >= 1.

    Returns:
        Вычет в диапазоне [0, modulus).
    """
    if exp < 0:
        raise DomainError(f"Отрицательный показатель: {exp}")
    if modulus < 1:
        raise DomainError(f"Модуль должен быть >= 1, получено {modulus}")
    # Встроенный pow реализует двоичное возведение (O(log exp) умножений)
    return pow(base, exp, modulus)


def mod_inverse(a: int, modulus: int) -> int:
    """Обратный элемент a по модулю modulus; gcd(a, modulus) должен быть 1."""
    if modulus < 1:
        raise DomainError(f"Модуль должен быть >= 1, получено {modulus}")
    try:
        return pow(a, -1, modulus)
    except ValueError as e:
        raise DomainError(f"{a} необратим по модулю {modulus}") from e


def legendre(a: int, p: int) -> int:
    """
    Символ Лежандра (a/p) по критерию Эйлера.

    Простота p не проверяется (вызывающий код гарантирует),
    но чётные и неположительные p отклоняются.

    Returns:
        0, если p | a; иначе +1 или -1.
    """
    if p < 3 or p % 2 == 0:
        raise DomainError(f"Символ Лежандра определён для нечётного простого p, получено {p}")
    r = mod_pow(a, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r


def is_prime(n: int) -> bool:
    """
    Тест Миллера-Рабина с фиксированным набором свидетелей.
    Ответ детерминирован для n < 3.3e24.
    """
    if n < 0:
        raise DomainError(f"is_prime ожидает n >= 0, получено {n}")
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes_in(values) -> List[int]:
    """Оставляет из набора целых только нечётные простые (для p-диапазонов)."""
    return [p for p in values if p > 2 and is_prime(p)]


def v2(n: int) -> int:
    """2-адическое нормирование: наибольшее t с 2^t | n."""
    if n == 0:
        raise DomainError("v2(0) не определено")
    n = abs(n)
    return (n & -n).bit_length() - 1


def binomial_row(n: int) -> Iterator[int]:
    """
    Строка биномиальных коэффициентов C(n, 0..n) инкрементально:
    C(n, k+1) = C(n, k) * (n - k) / (k + 1), деление точное.
    """
    if n < 0:
        raise DomainError(f"Отрицательная строка биномов: {n}")
    c = 1
    yield c
    for k in range(n):
        c = c * (n - k) // (k + 1)
        yield c


def binomial(n: int, k: int) -> int:
    """C(n, k) для n >= 0; ноль вне диапазона 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"Отрицательный верхний индекс: {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)

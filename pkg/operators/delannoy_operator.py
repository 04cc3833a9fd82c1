# operators/delannoy_operator.py
"""
Аннулятор последовательности F_k(z) = eps^k D_k(z):

    L = (k+2) sigma^2 - eps (2k+3)(2z+1) sigma + (k+1),

и граничное тождество
    sum_{k<n} L*(x)(k) F_k(z) = n (x(n-1) F_{n-1}(z) - x(n-2) F_n(z)).
"""
from fractions import Fraction
from typing import Any, Optional, Tuple

from arith.ratfunc import RatFunc
from operators.kpoly import K, KPoly
from operators.shift_operator import ShiftOperator
from sequences.delannoy import DelannoyIterator
from utils.exceptions import OperatorException


def delannoy_operator(epsilon: int = 1, z: Optional[Any] = None) -> ShiftOperator:
    """
    Оператор порядка 2, аннулирующий eps^k D_k(z).

    Args:
        epsilon: Знак, +1 или -1.
        z: Числовое значение параметра; None -- символьный z.
    """
    if epsilon not in (1, -1):
        raise OperatorException(f"epsilon должен быть +1 или -1, получено {epsilon}")
    zz = RatFunc.z() if z is None else RatFunc.constant(Fraction(z))
    a0 = K + 1
    a1 = (2 * K + 3) * (-epsilon * (2 * zz + 1))
    a2 = K + 2
    return ShiftOperator([a0, a1, a2])


def delannoy_values(count: int, z: Any, epsilon: int = 1):
    """F_0(z), ..., F_{count-1}(z)."""
    return DelannoyIterator(z, epsilon).take(count)


def boundary_sum_identity(x: KPoly, n: int, z: Any, epsilon: int = 1) -> Tuple[Any, Any]:
    """
    Обе стороны граничного тождества, вычисленные независимо:
    левая -- прямым суммированием L*(x)(k) F_k(z), правая -- по
    замкнутой форме n (x(n-1) F_{n-1} - x(n-2) F_n).

    Returns:
        (lhs, rhs); для числового z это Fraction.
    """
    if n < 1:
        raise OperatorException(f"n должно быть >= 1, получено {n}")
    op = delannoy_operator(epsilon)
    lx = op.adjoint_apply(x)
    zz = None if z is None else Fraction(z)
    values = delannoy_values(n + 1, RatFunc.z() if zz is None else zz, epsilon)

    lhs: Any = Fraction(0)
    for k in range(n):
        lhs = lhs + lx.evaluate_at(k, zz) * values[k]
    rhs = n * (x.evaluate_at(n - 1, zz) * values[n - 1] - x.evaluate_at(n - 2, zz) * values[n])
    return lhs, rhs

# operators/shift_operator.py
"""
Оператор сдвига L = sum_{i=0}^{J} a_i(k) sigma^i с полиномиальными
коэффициентами, его сопряжённый L* и телескопический сертификат.
"""
from fractions import Fraction
from typing import Any, List, Sequence

from operators.kpoly import KPoly
from utils.exceptions import OperatorException


class ShiftOperator:
    """Неизменяемый оператор сдвига порядка J с a_J != 0."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Any]):
        """
        Args:
            coeffs: a_0, ..., a_J -- KPoly или то, что к нему приводится.
        """
        cs = [c if isinstance(c, KPoly) else KPoly.constant(c) for c in coeffs]
        if not cs or cs[-1].is_zero():
            raise OperatorException("Старший коэффициент a_J оператора должен быть ненулевым")
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        """Порядок J."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def coefficient(self, i: int) -> KPoly:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return KPoly.zero()

    def specialize(self, z: Any) -> "ShiftOperator":
        """Подстановка числового z в коэффициенты."""
        return ShiftOperator([a.specialize(z) for a in self._coeffs])

    # --- действие на последовательности ---
    def apply(self, values: Sequence[Any], k: int, z: Any = None) -> Any:
        """
        (L F)(k) = sum_i a_i(k) F(k+i) для числового окна values[k..k+J].
        """
        if k + self.order >= len(values):
            raise OperatorException(f"Окно значений слишком короткое для k={k}")
        total: Any = 0
        for i, a in enumerate(self._coeffs):
            total = total + a.evaluate_at(k, z) * values[k + i]
        return total

    # --- сопряжённый оператор ---
    def adjoint_apply(self, x: KPoly) -> KPoly:
        """L*(x)(k) = sum_i a_i(k-i) x(k-i)."""
        total = KPoly.zero()
        if x.is_zero():
            return total
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            total = total + (a * x).shift(-i)
        return total

    def telescoping_u(self, x: KPoly) -> List[KPoly]:
        """
        u_i(k) = sum_{j=1}^{J-i} a_{i+j}(k-j) x(k-j), i = 0..J-1:
        L*(x)(k) F(k) = Delta(-sum_i u_i(k) F(k+i)) для F с L(F) = 0.
        """
        J = self.order
        out: List[KPoly] = []
        for i in range(J):
            u = KPoly.zero()
            for j in range(1, J - i + 1):
                a = self._coeffs[i + j]
                if a.is_zero() or x.is_zero():
                    continue
                u = u + (a * x).shift(-j)
            out.append(u)
        return out

    def boundary_terms(self, x: KPoly, values: Sequence[Any], n: int, z: Any = None) -> Any:
        """
        Правая часть sum_{k<n} L*(x)(k) F(k) =
        sum_i u_i(0) F(i) - sum_i u_i(n) F(n+i).
        """
        us = self.telescoping_u(x)
        if n + self.order - 1 >= len(values):
            raise OperatorException(f"Нужно не меньше {n + self.order} значений F")
        head = sum((u.evaluate_at(0, z) * values[i] for i, u in enumerate(us)), Fraction(0))
        tail = sum((u.evaluate_at(n, z) * values[n + i] for i, u in enumerate(us)), Fraction(0))
        return head - tail

    # --- печать ---
    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [str(a) for a in self._coeffs],
        }

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        parts = []
        for i, a in reversed(list(enumerate(self._coeffs))):
            if a.is_zero():
                continue
            sig = "" if i == 0 else ("*sigma" if i == 1 else f"*sigma^{i}")
            parts.append(f"({a}){sig}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ShiftOperator({self})"


def sigma_minus_one() -> ShiftOperator:
    """sigma - 1: аннулятор постоянной последовательности."""
    return ShiftOperator([KPoly.constant(-1), KPoly.constant(1)])

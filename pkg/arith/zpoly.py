# arith/zpoly.py
"""
Многочлены от параметра z с точными рациональными коэффициентами.
Кольцо Q[z] -- то же, что лежит под полем Q(z) (QQ_Z), поэтому
числители и знаменатели RatFunc -- это ZPoly без преобразований.
"""
from fractions import Fraction
from math import gcd
from typing import Any, List, Tuple

from sympy import Poly, Symbol, roots
from sympy.polys.domains import QQ

from arith.ring_poly import RingPoly
from utils.exceptions import DomainError

Z_SYMBOL = Symbol("z")
# Поле Q(z); его .field.ring -- кольцо Q[z]
QQ_Z = QQ.frac_field(Z_SYMBOL)


def to_fraction(c: Any) -> Fraction:
    """Элемент QQ (или sympy Rational) -> Fraction."""
    if isinstance(c, Fraction):
        return c
    if hasattr(c, "p") and hasattr(c, "q"):
        return Fraction(int(c.p), int(c.q))
    return Fraction(int(c.numerator), int(c.denominator))


def to_qq(c: Any) -> Any:
    """int/Fraction -> элемент QQ."""
    if isinstance(c, Fraction):
        return QQ(c.numerator, c.denominator)
    if isinstance(c, int):
        return QQ(c)
    if QQ.of_type(c):
        return c
    raise TypeError(f"Коэффициент ZPoly должен быть int или Fraction, получено {type(c).__name__}")


class ZPoly(RingPoly):
    """Многочлен от z над Q."""

    __slots__ = ()
    _ring = QQ_Z.field.ring
    var_name = "z"

    @classmethod
    def _to_ground(cls, c: Any) -> Any:
        return to_qq(c)

    @classmethod
    def _from_ground(cls, g: Any) -> Fraction:
        return to_fraction(g)

    @classmethod
    def _is_scalar(cls, other: Any) -> bool:
        return isinstance(other, (int, Fraction))

    # --- деление с остатком и НОД над Q ---
    def divmod(self, other: "ZPoly") -> Tuple["ZPoly", "ZPoly"]:
        if other.is_zero():
            raise DomainError("Деление многочлена на нулевой многочлен")
        q, r = self._poly.div(other._poly)
        return ZPoly._new(q), ZPoly._new(r)

    def __floordiv__(self, other: "ZPoly") -> "ZPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "ZPoly") -> "ZPoly":
        return self.divmod(other)[1]

    def monic(self) -> "ZPoly":
        return ZPoly._new(self._poly.monic())

    @staticmethod
    def gcd(a: "ZPoly", b: "ZPoly") -> "ZPoly":
        """Монический НОД над Q; gcd(0, 0) = 0."""
        if a.is_zero() and b.is_zero():
            return ZPoly.zero()
        return ZPoly._new(a._poly.gcd(b._poly).monic())

    @staticmethod
    def lcm(a: "ZPoly", b: "ZPoly") -> "ZPoly":
        """Монический НОК над Q."""
        if a.is_zero() or b.is_zero():
            return ZPoly.zero()
        return ZPoly._new(a._poly.lcm(b._poly).monic())

    # --- целочисленность ---
    def is_integral(self) -> bool:
        return all(to_fraction(c).denominator == 1 for c in self._poly.values())

    def integer_coeffs(self) -> List[int]:
        """Коэффициенты после домножения на общий знаменатель."""
        _, cleared = self._poly.clear_denoms()
        return [int(c) for c in ZPoly._new(cleared).coeffs]

    def content(self) -> int:
        """НОД целых коэффициентов (для целочисленного многочлена)."""
        return gcd(*self.integer_coeffs()) if self._poly else 0

    def evaluate_mod(self, x: int, modulus: int) -> int:
        """Значение целочисленного многочлена в x по модулю modulus."""
        if not self.is_integral():
            raise DomainError(f"Многочлен {self} не целочисленный")
        return int(self.evaluate(x)) % modulus

    # --- корни ---
    def to_sympy(self) -> Poly:
        return Poly(self._poly.as_expr(), Z_SYMBOL, domain=QQ)

    def rational_roots(self) -> List[Fraction]:
        """Все рациональные корни по возрастанию."""
        if self.is_zero():
            raise DomainError("У нулевого многочлена бесконечно много корней")
        if self.is_constant():
            return []
        return sorted(to_fraction(r) for r in roots(self.to_sympy(), filter="Q"))

    def nonnegative_integer_roots(self) -> List[int]:
        return [int(r) for r in self.rational_roots() if r >= 0 and r.denominator == 1]


Z = ZPoly.variable()

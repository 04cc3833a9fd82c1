# arith/ratfunc.py
"""
Рациональные функции от z: поле коэффициентов для всей символьной
работы (c_v, коэффициенты операторов). Хранятся как элементы поля
sympy QQ(z) (FracElement), сокращение -- на стороне sympy.

Наружу числитель и знаменатель отдаются в виде с моническим
знаменателем, так что рациональное содержание целиком в числителе.
"""
from fractions import Fraction
from math import gcd
from typing import Any, Tuple, Union

from sympy.polys.fields import FracElement

from arith.zpoly import QQ_Z, ZPoly, to_qq
from utils.exceptions import DomainError, PoleError

Scalar = Union[int, Fraction]

FIELD = QQ_Z.field


class RatFunc:
    """Неизменяемая рациональная функция num(z)/den(z)."""

    __slots__ = ("_frac",)

    def __init__(self, num: Union[ZPoly, Scalar] = 0, den: Union[ZPoly, Scalar] = 1):
        num = num if isinstance(num, ZPoly) else ZPoly.constant(num)
        den = den if isinstance(den, ZPoly) else ZPoly.constant(den)
        if den.is_zero():
            raise PoleError("Знаменатель рациональной функции равен нулю")
        self._frac = FIELD.new(num.poly, den.poly)

    @classmethod
    def from_element(cls, frac: FracElement) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._frac = frac
        return obj

    # --- конструкторы ---
    @classmethod
    def z(cls) -> "RatFunc":
        return cls.from_element(FIELD.gens[0])

    @classmethod
    def constant(cls, c: Scalar) -> "RatFunc":
        return cls.from_element(FIELD.ground_new(to_qq(c)))

    @classmethod
    def coerce(cls, value: Any) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        if isinstance(value, ZPoly):
            return cls.from_element(FIELD.new(value.poly))
        raise TypeError(f"Нельзя привести {type(value).__name__} к RatFunc")

    # --- свойства ---
    @property
    def element(self) -> FracElement:
        """Элемент поля sympy."""
        return self._frac

    def _monic_parts(self) -> Tuple[ZPoly, ZPoly]:
        num, den = self._frac.numer, self._frac.denom
        lc = den.LC
        return ZPoly(num.quo_ground(lc)), ZPoly(den.quo_ground(lc))

    @property
    def numerator(self) -> ZPoly:
        return self._monic_parts()[0]

    @property
    def denominator(self) -> ZPoly:
        """Монический знаменатель."""
        return self._monic_parts()[1]

    def integer_parts(self) -> Tuple[ZPoly, ZPoly]:
        """
        Целочисленные числитель и знаменатель без общего числового
        множителя; старший коэффициент знаменателя положителен.
        """
        cn, num = self._frac.numer.clear_denoms()
        cd, den = self._frac.denom.clear_denoms()
        num, den = ZPoly(num).scale(int(cd)), ZPoly(den).scale(int(cn))
        g = gcd(num.content(), den.content())
        if den.leading_coefficient() < 0:
            g = -g
        return num.scale(Fraction(1, g)), den.scale(Fraction(1, g))

    def is_zero(self) -> bool:
        return not self._frac

    def is_constant(self) -> bool:
        return self._frac.numer.is_ground and self._frac.denom.is_ground

    def is_polynomial(self) -> bool:
        return self._frac.denom.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} не константа")
        num, den = self._monic_parts()
        return num.constant_term()

    # --- арифметика ---
    @staticmethod
    def _lift(other: Any) -> Any:
        if isinstance(other, RatFunc):
            return other._frac
        if isinstance(other, (int, Fraction)):
            return FIELD.ground_new(to_qq(other))
        if isinstance(other, ZPoly):
            return FIELD.new(other.poly)
        return NotImplemented

    def __add__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc.from_element(self._frac + o)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc.from_element(-self._frac)

    def __sub__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc.from_element(self._frac - o)

    def __rsub__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc.from_element(o - self._frac)

    def __mul__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc.from_element(self._frac * o)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DomainError("Деление на нулевую рациональную функцию")
        return RatFunc.from_element(FIELD.new(self._frac.denom, self._frac.numer))

    def __truediv__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * RatFunc.from_element(o).inverse()

    def __rtruediv__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc.from_element(o) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc.from_element(self._frac ** n)

    # --- вычисление ---
    def evaluate(self, z: Scalar) -> Fraction:
        """Значение в рациональной точке; в нуле знаменателя -- PoleError."""
        num, den = self._monic_parts()
        d = den.evaluate(z)
        if d == 0:
            raise PoleError(f"Полюс функции {self} в точке z={z}")
        return num.evaluate(z) / d

    def __call__(self, z: Scalar) -> Fraction:
        return self.evaluate(z)

    def evaluate_mod(self, z: int, modulus: int) -> int:
        """Значение по модулю: целые числитель/знаменатель, знаменатель обратим."""
        num, den = self.integer_parts()
        d = den.evaluate_mod(z, modulus)
        try:
            inv = pow(d, -1, modulus)
        except ValueError as e:
            raise PoleError(f"Знаменатель {self} необратим по модулю {modulus} при z={z}") from e
        return num.evaluate_mod(z, modulus) * inv % modulus

    # --- сравнение и печать ---
    def __eq__(self, other: Any) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._frac.numer * o.denom == o.numer * self._frac.denom

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._monic_parts())

    def __reduce__(self):
        return RatFunc, self.integer_parts()

    def __str__(self) -> str:
        num, den = self.integer_parts()
        if den == 1:
            return str(num)
        num_text, den_text = str(num), str(den)
        if len(num.terms()) > 1:
            num_text = f"({num_text})"
        if len(den.terms()) > 1 or "*" in den_text:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

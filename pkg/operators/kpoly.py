# operators/kpoly.py
"""
Многочлены от индекса суммирования k с коэффициентами RatFunc.
Здесь живут x(k), y_v(k), коэффициенты операторов и b_l(k).
Кольцо -- sympy Q(z)[k].
"""
from fractions import Fraction
from typing import Any, Union

from sympy.polys.fields import FracElement
from sympy.polys.rings import ring

from arith.ratfunc import RatFunc
from arith.ring_poly import RingPoly
from arith.zpoly import QQ_Z, ZPoly

Coefficient = Union[int, Fraction, ZPoly, RatFunc]

K_RING, _ = ring("k", QQ_Z)


class KPoly(RingPoly):
    """Многочлен от k над полем Q(z)."""

    __slots__ = ()
    _ring = K_RING
    var_name = "k"

    @classmethod
    def _to_ground(cls, c: Any) -> FracElement:
        if isinstance(c, FracElement):
            return c
        return RatFunc.coerce(c).element

    @classmethod
    def _from_ground(cls, g: FracElement) -> RatFunc:
        return RatFunc.from_element(g)

    @classmethod
    def _is_scalar(cls, other: Any) -> bool:
        return isinstance(other, (int, Fraction, ZPoly, RatFunc))

    def evaluate_at(self, k: Any, z: Any = None) -> Any:
        """
        Значение в точке k. Если задан числовой z, коэффициенты
        сначала специализируются и результат -- Fraction.
        """
        if z is None:
            return self.evaluate(k)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c.evaluate(z)
        return acc

    def specialize(self, z: Any) -> "KPoly":
        """Подстановка числового z во все коэффициенты."""
        return KPoly([c.evaluate(z) for c in self.coeffs])


K = KPoly.variable()

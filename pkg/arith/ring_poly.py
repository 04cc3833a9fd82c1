# arith/ring_poly.py
"""
Общая обёртка над одномерным многочленом sympy (PolyElement).

Подкласс задаёт кольцо (_ring, построенное sympy.polys.rings.ring)
и перевод коэффициентов между доменом sympy и значениями API:
_to_ground (int/Fraction/... -> элемент домена) и _from_ground.
Вся алгебра (умножение, деление, НОД, подстановка) -- на стороне sympy.
"""
from typing import Any, Iterable, List, Optional, Tuple, TypeVar, Union

from sympy.polys.rings import PolyElement, PolyRing

P = TypeVar("P", bound="RingPoly")


class RingPoly:
    """Неизменяемый многочлен одной переменной над доменом подкласса."""

    __slots__ = ("_poly",)

    _ring: PolyRing = None
    # Имя переменной для печати
    var_name: str = "x"

    def __init__(self, coeffs: Union[PolyElement, Iterable[Any]] = ()):
        """
        Args:
            coeffs: коэффициенты по возрастанию степеней или готовый
                элемент кольца self._ring.
        """
        if isinstance(coeffs, PolyElement):
            if coeffs.ring != self._ring:
                raise TypeError(f"Элемент чужого кольца {coeffs.ring}")
            self._poly = coeffs
            return
        terms = {}
        for i, c in enumerate(coeffs):
            g = self._to_ground(c)
            if g:
                terms[(i,)] = g
        self._poly = self._ring.from_dict(terms)

    # --- домен коэффициентов ---
    @classmethod
    def _to_ground(cls, c: Any) -> Any:
        raise NotImplementedError

    @classmethod
    def _from_ground(cls, g: Any) -> Any:
        raise NotImplementedError

    @classmethod
    def _is_scalar(cls, other: Any) -> bool:
        raise NotImplementedError

    @classmethod
    def _new(cls: type, poly: PolyElement) -> P:
        obj = cls.__new__(cls)
        obj._poly = poly
        return obj

    # --- конструкторы ---
    @classmethod
    def zero(cls: type) -> P:
        return cls._new(cls._ring.zero)

    @classmethod
    def one(cls: type) -> P:
        return cls._new(cls._ring.one)

    @classmethod
    def constant(cls: type, c: Any) -> P:
        return cls._new(cls._ring.ground_new(cls._to_ground(c)))

    @classmethod
    def variable(cls: type) -> P:
        return cls._new(cls._ring.gens[0])

    @classmethod
    def linear(cls: type, a: Any, b: Any) -> P:
        """Многочлен a*x + b."""
        ring = cls._ring
        return cls._new(ring.gens[0].mul_ground(cls._to_ground(a)) + ring.ground_new(cls._to_ground(b)))

    # --- свойства ---
    @property
    def poly(self) -> PolyElement:
        """Элемент кольца sympy."""
        return self._poly

    @property
    def coeffs(self) -> Tuple[Any, ...]:
        if not self._poly:
            return ()
        dense = dict(self._poly)
        zero = self._ring.domain.zero
        return tuple(self._from_ground(dense.get((i,), zero)) for i in range(self.degree + 1))

    @property
    def degree(self) -> Optional[int]:
        """Степень; None для нулевого многочлена."""
        return self._poly.degree() if self._poly else None

    def is_zero(self) -> bool:
        return not self._poly

    def is_constant(self) -> bool:
        return self._poly.is_ground

    def coefficient(self, i: int) -> Any:
        return self._from_ground(dict(self._poly).get((i,), self._ring.domain.zero))

    def leading_coefficient(self) -> Any:
        return self._from_ground(self._poly.LC)

    def constant_term(self) -> Any:
        return self.coefficient(0)

    # --- арифметика ---
    def _lift(self, other: Any) -> Any:
        if isinstance(other, type(self)):
            return other._poly
        if self._is_scalar(other):
            return self._ring.ground_new(self._to_ground(other))
        return NotImplemented

    def __add__(self: P, other: Any) -> P:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self._poly + o)

    __radd__ = __add__

    def __neg__(self: P) -> P:
        return self._new(-self._poly)

    def __sub__(self: P, other: Any) -> P:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self._poly - o)

    def __rsub__(self: P, other: Any) -> P:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o - self._poly)

    def scale(self: P, c: Any) -> P:
        return self._new(self._poly.mul_ground(self._to_ground(c)))

    def __mul__(self: P, other: Any) -> P:
        if self._is_scalar(other):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._new(self._poly * other._poly)

    def __rmul__(self: P, other: Any) -> P:
        if self._is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self: P, n: int) -> P:
        if n < 0:
            raise ValueError("Отрицательная степень многочлена")
        return self._new(self._poly ** n)

    # --- вычисление и преобразования ---
    def __call__(self, x: Any) -> Any:
        return self.evaluate(x)

    def evaluate(self, x: Any) -> Any:
        """Значение в точке x из домена коэффициентов."""
        gen = self._ring.gens[0]
        return self._from_ground(self._poly.evaluate(gen, self._to_ground(x)))

    def derivative(self: P) -> P:
        return self._new(self._poly.diff(self._ring.gens[0]))

    def compose_linear(self: P, a: Any, b: Any) -> P:
        """self(a*x + b)."""
        gen = self._ring.gens[0]
        return self._new(self._poly.compose(gen, type(self).linear(a, b)._poly))

    def shift(self: P, c: Any) -> P:
        """self(x + c)."""
        return self.compose_linear(1, c)

    # --- сравнение и печать ---
    def __eq__(self, other: Any) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._poly == o

    def __hash__(self) -> int:
        return hash(self._poly)

    def __reduce__(self):
        return type(self), (self.coeffs,)

    def terms(self) -> List[Tuple[int, Any]]:
        """Ненулевые члены (степень, коэффициент), от старших к младшим."""
        return sorted(((m[0], self._from_ground(c)) for m, c in self._poly.items()),
                      key=lambda t: t[0], reverse=True)

    def to_string(self, var: Optional[str] = None) -> str:
        var = var or self.var_name
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i, c in self.terms():
            text = str(c)
            if (" " in text or "/" in text) and i > 0:
                text = f"({text})"
            if i == 0:
                mono = text
            else:
                power = var if i == 1 else f"{var}^{i}"
                if text == "1":
                    mono = power
                elif text == "-1":
                    mono = f"-{power}"
                else:
                    mono = f"{text}*{power}"
            parts.append(mono)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_string()})"

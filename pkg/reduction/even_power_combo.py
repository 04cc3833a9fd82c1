# reduction/even_power_combo.py
"""
Линейные комбинации степеней (2k+c)^i с одинаковой чётностью показателей.
Базис 2k+1 -- для формулы L*(x_s), базис 2k+3 -- для y_v(k).
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

from arith.ratfunc import RatFunc
from operators.kpoly import K, KPoly
from utils.exceptions import ReductionException

BASES = (1, 3)


class EvenPowerCombo:
    """sum_i coeff_i * (2k + c)^i; нулевые коэффициенты не хранятся."""

    __slots__ = ("_terms", "_base")

    def __init__(self, terms: Dict[int, Any], base: int = 3):
        if base not in BASES:
            raise ReductionException(f"Базис 2k+{base} не поддерживается")
        clean: Dict[int, Any] = {}
        for i, c in terms.items():
            if i < 0:
                raise ReductionException(f"Отрицательный показатель {i}")
            if c != 0:
                clean[i] = c
        parities = {i % 2 for i in clean}
        if len(parities) > 1:
            raise ReductionException("Показатели комбинации разной чётности")
        self._terms = clean
        self._base = base

    @classmethod
    def power(cls, i: int, coeff: Any = 1, base: int = 3) -> "EvenPowerCombo":
        return cls({i: coeff}, base)

    @property
    def base(self) -> int:
        return self._base

    @property
    def terms(self) -> Dict[int, Any]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[int, Any]]:
        return sorted(self._terms.items())

    def coefficient(self, i: int) -> Any:
        return self._terms.get(i, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _same_base(self, other: "EvenPowerCombo") -> None:
        if other._base != self._base:
            raise ReductionException("Комбинации в разных базисах")

    def __add__(self, other: "EvenPowerCombo") -> "EvenPowerCombo":
        self._same_base(other)
        terms = dict(self._terms)
        for i, c in other._terms.items():
            terms[i] = terms.get(i, 0) + c
        return EvenPowerCombo(terms, self._base)

    def __neg__(self) -> "EvenPowerCombo":
        return EvenPowerCombo({i: -c for i, c in self._terms.items()}, self._base)

    def __sub__(self, other: "EvenPowerCombo") -> "EvenPowerCombo":
        return self + (-other)

    def scale(self, factor: Any) -> "EvenPowerCombo":
        return EvenPowerCombo({i: c * factor for i, c in self._terms.items()}, self._base)

    def derivative(self) -> "EvenPowerCombo":
        """d/dk (2k+c)^i = 2i (2k+c)^{i-1}."""
        return EvenPowerCombo({i - 1: c * (2 * i) for i, c in self._terms.items() if i > 0}, self._base)

    def evaluate(self, k: Any) -> Any:
        t = 2 * k + self._base
        return sum((c * t ** i for i, c in self._terms.items()), Fraction(0))

    def to_kpoly(self) -> KPoly:
        lin = 2 * K + self._base
        out = KPoly.zero()
        for i, c in self.items():
            out = out + lin ** i * RatFunc.coerce(c)
        return out

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, EvenPowerCombo):
            return NotImplemented
        return self._base == other._base and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._base, tuple(self.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, c in sorted(self._terms.items(), reverse=True):
            lin = f"(2k+{self._base})"
            if i == 0:
                parts.append(f"{c}")
            else:
                power = lin if i == 1 else f"{lin}^{i}"
                parts.append(power if c == 1 else f"({c})*{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"EvenPowerCombo({self})"

# reduction/general_reduce.py
"""
Конструктивная редукция для степенно-разложимого оператора.

Для t = k - gamma и d = deg L степень (scale*t)^m приводится по модулю
образа L* к комбинации (scale*t)^i, i < d, i = m (mod 2).
Редукторы -- L*(x_s) с x_s = (scale*(t + J/2))^s; у L*(x_s)
чётность по t равна d + s, поэтому чётность остатка сохраняется.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from arith.ratfunc import RatFunc
from operators.kpoly import KPoly
from operators.partibility import find_gamma, nondegeneracy, operator_degree, partibility_check
from operators.shift_operator import ShiftOperator
from utils.exceptions import DegenerateOperatorError, ReductionError


@dataclass
class ReductionCertificate:
    """
    (scale*(k-gamma))^m = L*(x) + sum_i lambdas[i] (scale*(k-gamma))^i.
    """
    operator: ShiftOperator
    gamma: Fraction
    m: int
    witness: KPoly
    remainder: Dict[int, RatFunc] = field(default_factory=dict)
    scale: Fraction = Fraction(2)

    def basis(self, i: int) -> KPoly:
        return KPoly.linear(self.scale, -self.scale * self.gamma) ** i

    def residual(self) -> KPoly:
        out = self.basis(self.m) - self.operator.adjoint_apply(self.witness)
        for i, lam in self.remainder.items():
            out = out - self.basis(i) * lam
        return out

    def check(self) -> bool:
        """Тождество сертификата как многочленов."""
        return self.residual().is_zero()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "operator": self.operator.to_dict(),
            "gamma": str(self.gamma),
            "m": self.m,
            "scale": str(self.scale),
            "witness": str(self.witness),
            "remainder": {str(i): str(lam) for i, lam in sorted(self.remainder.items())},
        }


def general_reduce(op: ShiftOperator, gamma: Any, m: int, scale: Any = 2) -> ReductionCertificate:
    """
    Жадное исключение старших степеней.

    По умолчанию базис 2(k-gamma): для оператора Деланноя с gamma = -1/2
    это степени 2k+1 и остаток при m = 2v равен c_v (c~_v).
    scale = 1 даёт базис k-gamma.

    Raises:
        ReductionError: оператор вырожден, не разложим с данным gamma,
            d < 0, или старший коэффициент редуктора обратился в ноль.
    """
    if m < 0:
        raise ReductionError(f"m должно быть >= 0, получено {m}")
    gamma = Fraction(gamma)
    scale = Fraction(scale)
    if scale == 0:
        raise ReductionError("scale не может быть нулевым")

    d, _ = operator_degree(op)
    if d is None or d < 0:
        raise ReductionError(f"Редукция требует deg L >= 0, получено {d}")
    try:
        _, nondegenerate = nondegeneracy(op)
    except DegenerateOperatorError as e:
        raise ReductionError("Оператор вырожден при всех s") from e
    if not nondegenerate:
        raise ReductionError("Оператор вырожден: R_L не пусто")
    if not partibility_check(op, gamma):
        raise ReductionError(f"Условие разложимости не выполнено при gamma={gamma}")

    t_lin = KPoly.linear(scale, -scale * gamma)
    if m < d:
        return ReductionCertificate(op, gamma, m, KPoly.zero(), {m: RatFunc.constant(1)}, scale)

    reducer_base = KPoly.linear(scale, scale * (Fraction(op.order, 2) - gamma))
    reducers: Dict[int, KPoly] = {}

    residual = t_lin ** m
    witness = KPoly.zero()
    while residual.degree is not None and residual.degree >= d:
        top = residual.degree
        s = top - d
        if s not in reducers:
            reducers[s] = op.adjoint_apply(reducer_base ** s)
        reducer = reducers[s]
        lead = reducer.coefficient(top)
        if lead.is_zero():
            raise ReductionError(f"Старший коэффициент L*(x_{s}) равен нулю")
        coef = residual.leading_coefficient() / lead
        residual = residual - reducer * coef
        witness = witness + reducer_base ** s * coef

    remainder = _in_scaled_basis(residual, gamma, scale)
    bad = [i for i in remainder if i % 2 != m % 2]
    if bad:
        raise ReductionError(f"Остаток содержит степени чётности, отличной от m: {bad}")
    return ReductionCertificate(op, gamma, m, witness, remainder, scale)


def _in_scaled_basis(poly: KPoly, gamma: Fraction, scale: Fraction) -> Dict[int, RatFunc]:
    """Коэффициенты poly по степеням scale*(k-gamma)."""
    in_t = poly.shift(gamma)
    out: Dict[int, RatFunc] = {}
    for i, c in enumerate(in_t.coeffs):
        if not c.is_zero():
            out[i] = c / (scale ** i)
    return out


def reduce_with_center(op: ShiftOperator, m: int, scale: Any = 2, gamma: Optional[Any] = None) -> ReductionCertificate:
    """general_reduce с автоматическим поиском gamma."""
    if gamma is None:
        gamma = find_gamma(op)
        if gamma is None:
            raise ReductionError("Оператор не имеет рационального центра симметрии")
    return general_reduce(op, gamma, m, scale)

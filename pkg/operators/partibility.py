# operators/partibility.py
"""
Степень оператора, определяющий (indicial) многочлен, невырожденность
и условие степенной разложимости

    a_i(gamma + k) = (-1)^{deg L} a_{J-i}(gamma - k - J),   i <= J/2.

Степень нулевого многочлена -- None (аналог -inf); оператор, у которого
все b_l нулевые, имеет степень None.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from arith.ratfunc import RatFunc
from arith.zpoly import ZPoly
from operators.kpoly import KPoly
from operators.shift_operator import ShiftOperator
from utils.exceptions import DegenerateOperatorError


def b_polys(op: ShiftOperator) -> List[KPoly]:
    """b_l(k) = sum_{j=l}^{J} C(j,l) a_{J-j}(k+j-J), l = 0..J."""
    J = op.order
    shifted = [op.coefficient(J - j).shift(j - J) for j in range(J + 1)]
    out = []
    for l in range(J + 1):
        b = KPoly.zero()
        for j in range(l, J + 1):
            b = b + shifted[j] * comb(j, l)
        out.append(b)
    return out


def operator_degree(op: ShiftOperator) -> Tuple[Optional[int], List[KPoly]]:
    """(d, [b_0..b_J]) с d = max_l (deg b_l - l)."""
    bs = b_polys(op)
    candidates = [b.degree - l for l, b in enumerate(bs) if b.degree is not None]
    return (max(candidates) if candidates else None), bs


def falling_factorial(l: int) -> KPoly:
    """s(s-1)...(s-l+1) как многочлен от s."""
    out = KPoly.one()
    for i in range(l):
        out = out * KPoly.linear(1, -i)
    return out


def indicial_polynomial(op: ShiftOperator) -> KPoly:
    """
    I(s) = sum_l [k^{d+l}] b_l(k) * s^(falling l), многочлен от s
    с коэффициентами в Q(z). Для d = None возвращается нулевой.
    """
    d, bs = operator_degree(op)
    if d is None:
        return KPoly.zero()
    total = KPoly.zero()
    for l, b in enumerate(bs):
        if d + l < 0:
            continue
        c = b.coefficient(d + l)
        if c.is_zero():
            continue
        total = total + falling_factorial(l) * c
    return total


def _cleared_numerators(poly: KPoly) -> List[ZPoly]:
    """Коэффициенты poly после домножения на общий знаменатель (ZPoly в z)."""
    den = ZPoly.one()
    for c in poly.coeffs:
        den = ZPoly.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in poly.coeffs]


def nondegeneracy(op: ShiftOperator) -> Tuple[FrozenSet[int], bool]:
    """
    R_L -- неотрицательные целые корни I(s), тождественные по z.

    Returns:
        (R_L, R_L пусто).

    Raises:
        DegenerateOperatorError: I(s) тождественно ноль (вырожден при всех s).
    """
    indicial = indicial_polynomial(op)
    if indicial.is_zero():
        raise DegenerateOperatorError("Определяющий многочлен тождественно равен нулю")
    numerators = _cleared_numerators(indicial)
    # I(s) = sum_j z^j Q_j(s); s -- общий корень всех Q_j
    top = max(p.degree for p in numerators if p.degree is not None)
    common = ZPoly.zero()
    for j in range(top + 1):
        q = ZPoly([p.coefficient(j) for p in numerators])
        common = ZPoly.gcd(common, q)
    if common.is_zero() or common.is_constant():
        roots: FrozenSet[int] = frozenset()
    else:
        roots = frozenset(common.nonnegative_integer_roots())
    return roots, not roots


def exceptional_z(op: ShiftOperator) -> List[Fraction]:
    """
    Рациональные z, при которых старший по s коэффициент I(s)
    обращается в ноль: там символьный вывод о невырожденности
    не переносится на числовой оператор.
    """
    indicial = indicial_polynomial(op)
    if indicial.is_zero():
        return []
    lead = indicial.leading_coefficient().numerator
    if lead.is_constant():
        return []
    return lead.rational_roots()


def partibility_check(op: ShiftOperator, gamma: Any) -> bool:
    """Тождество a_i(gamma+k) = (-1)^d a_{J-i}(gamma-k-J) для i <= J/2."""
    d, _ = operator_degree(op)
    if d is None:
        return False
    gamma = Fraction(gamma)
    sign = -1 if d % 2 else 1
    J = op.order
    for i in range(J // 2 + 1):
        left = op.coefficient(i).compose_linear(1, gamma)
        right = op.coefficient(J - i).compose_linear(-1, gamma - J) * sign
        if left != right:
            return False
    return True


def find_gamma(op: ShiftOperator) -> Optional[Fraction]:
    """
    Центр симметрии gamma из двух старших коэффициентов каждой пары
    (a_i, a_{J-i}); результат обязательно проходит partibility_check.
    """
    d, _ = operator_degree(op)
    if d is None:
        return None
    J = op.order
    candidates: List[RatFunc] = []
    for i in range(J // 2 + 1):
        a, b = op.coefficient(i), op.coefficient(J - i)
        if a.is_zero() and b.is_zero():
            continue
        if a.degree != b.degree:
            return None
        n = a.degree
        if n == 0:
            continue
        tau = 1 if (d + n) % 2 == 0 else -1
        alpha_n, alpha_m = a.coefficient(n), a.coefficient(n - 1)
        beta_n, beta_m = b.coefficient(n), b.coefficient(n - 1)
        if alpha_n != beta_n * tau:
            return None
        candidates.append((alpha_n * (n * J) - alpha_m - beta_m * tau) / (alpha_n * (2 * n)))

    if not candidates:
        gamma = Fraction(0)
    else:
        first = candidates[0]
        if any(c != first for c in candidates[1:]) or not first.is_constant():
            return None
        gamma = first.constant_value()
    return gamma if partibility_check(op, gamma) else None


@dataclass
class PartibilityReport:
    """Сводка по оператору для `op inspect`."""
    order: int
    coefficients: List[KPoly]
    degree: Optional[int]
    b: List[KPoly]
    indicial: KPoly
    roots: FrozenSet[int] = frozenset()
    nondegenerate: bool = False
    degenerate_everywhere: bool = False
    exceptional_z: List[Fraction] = field(default_factory=list)
    gamma: Optional[Fraction] = None
    condition_holds: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "coefficients": [str(a) for a in self.coefficients],
            "degree": self.degree,
            "b": [str(b) for b in self.b],
            "indicial": self.indicial.to_string("s"),
            "R_L": sorted(self.roots),
            "nondegenerate": self.nondegenerate,
            "degenerate_everywhere": self.degenerate_everywhere,
            "exceptional_z": [str(z) for z in self.exceptional_z],
            "gamma": None if self.gamma is None else str(self.gamma),
            "power_partible": self.condition_holds,
        }


def inspect(op: ShiftOperator, gamma: Optional[Any] = None) -> PartibilityReport:
    """Полный разбор оператора; без gamma центр ищется через find_gamma."""
    d, bs = operator_degree(op)
    report = PartibilityReport(
        order=op.order,
        coefficients=list(op.coeffs),
        degree=d,
        b=bs,
        indicial=indicial_polynomial(op),
    )
    try:
        report.roots, report.nondegenerate = nondegeneracy(op)
    except DegenerateOperatorError:
        report.degenerate_everywhere = True
    report.exceptional_z = exceptional_z(op)
    report.gamma = Fraction(gamma) if gamma is not None else find_gamma(op)
    report.condition_holds = report.gamma is not None and partibility_check(op, report.gamma)
    return report

# reduction/delannoy_reduction.py
"""
Явная редукция для оператора Деланноя.

Для x_s(k) = (2k+3)^s:
    L*(x_s) = (-2 eps z - eps + 1)(2k+1)^{s+1}
              + 2 sum_{j=1}^{floor((s+1)/2)} e_j^{(s)} (2k+1)^{s+1-2j},
    e_j^{(s)} = C(s,2j) 2^{2j-1} + C(s,2j-1) 2^{2j-2}.

Отсюда рекурсии для c_v, c~_v (сравнения по модулю n), многочленов
y_v, y~_v (сравнения по модулю n^3 для n = 2^a) и целых rho_v, rho~_v.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from arith.ratfunc import RatFunc
from operators.delannoy_operator import delannoy_operator
from operators.kpoly import K, KPoly
from reduction.even_power_combo import EvenPowerCombo
from utils.exceptions import DomainError, IntegralityError, ReductionException


def _check_epsilon(epsilon: int) -> None:
    if epsilon not in (1, -1):
        raise DomainError(f"epsilon должен быть +1 или -1, получено {epsilon}")


@lru_cache(maxsize=None)
def e_coeff(s: int, j: int) -> int:
    """e_j^{(s)}, 1 <= j <= floor((s+1)/2)."""
    if s < 0 or j < 1 or j > (s + 1) // 2:
        raise DomainError(f"e_j^(s) не определён для s={s}, j={j}")
    return comb(s, 2 * j) * 2 ** (2 * j - 1) + comb(s, 2 * j - 1) * 2 ** (2 * j - 2)


def leading_factor(epsilon: int) -> RatFunc:
    """-2 eps z - eps + 1: -2z при eps = 1, 2(z+1) при eps = -1."""
    _check_epsilon(epsilon)
    return RatFunc.z() * (-2 * epsilon) + (1 - epsilon)


def adjoint_closed_form(s: int, epsilon: int = 1) -> EvenPowerCombo:
    """L*((2k+3)^s) в базисе (2k+1)."""
    if s < 0:
        raise DomainError(f"s должно быть >= 0, получено {s}")
    terms = {s + 1: leading_factor(epsilon)}
    for j in range(1, (s + 1) // 2 + 1):
        terms[s + 1 - 2 * j] = RatFunc.constant(2 * e_coeff(s, j))
    return EvenPowerCombo(terms, base=1)


def c_constants(v_max: int) -> Tuple[List[RatFunc], List[RatFunc]]:
    """
    c_v = (1/z) sum_j e_j^{(2v-1)} c_{v-j},
    c~_v = -1/(z+1) sum_j e_j^{(2v-1)} c~_{v-j},  c_0 = c~_0 = 1.
    """
    if v_max < 0:
        raise DomainError(f"v_max должно быть >= 0, получено {v_max}")
    z = RatFunc.z()
    inv_z = z.inverse()
    inv_z1 = -(z + 1).inverse()
    c = [RatFunc.constant(1)]
    ct = [RatFunc.constant(1)]
    for v in range(1, v_max + 1):
        acc = RatFunc.constant(0)
        acc_t = RatFunc.constant(0)
        for j in range(1, v + 1):
            e = e_coeff(2 * v - 1, j)
            acc = acc + c[v - j] * e
            acc_t = acc_t + ct[v - j] * e
        c.append(acc * inv_z)
        ct.append(acc_t * inv_z1)
    return c, ct


def y_polys(v_max: int) -> Tuple[List[EvenPowerCombo], List[EvenPowerCombo]]:
    """
    y_0 = -1/2,  y_v = -(2k+3)^{2v}/2 + sum_j e_j^{(2v)} y_{v-j};
    y~_0 = 1/4,  y~_v = (2k+3)^{2v}/4 - sum_j e_j^{(2v)}/2 y~_{v-j}.
    """
    if v_max < 0:
        raise DomainError(f"v_max должно быть >= 0, получено {v_max}")
    y = [EvenPowerCombo.power(0, Fraction(-1, 2))]
    yt = [EvenPowerCombo.power(0, Fraction(1, 4))]
    for v in range(1, v_max + 1):
        cur = EvenPowerCombo.power(2 * v, Fraction(-1, 2))
        cur_t = EvenPowerCombo.power(2 * v, Fraction(1, 4))
        for j in range(1, v + 1):
            e = e_coeff(2 * v, j)
            cur = cur + y[v - j].scale(e)
            cur_t = cur_t - yt[v - j].scale(Fraction(e, 2))
        y.append(cur)
        yt.append(cur_t)
    return y, yt


def _as_integer(value: Fraction, what: str) -> int:
    if Fraction(value).denominator != 1:
        raise IntegralityError(f"{what} = {value} не целое")
    return int(value)


@dataclass(frozen=True)
class RhoConstants:
    """rho_v, rho~_v двумя путями и признаки целочисленности разложений."""
    rho: List[int]
    rho_tilde: List[int]
    s0: List[int]
    s1_tilde: List[int]
    s_integral: List[bool]
    s_tilde_integral: List[bool]
    derivative_integral: List[bool]


def shifted_coefficients(combo: EvenPowerCombo) -> List[Fraction]:
    """Коэффициенты y(k-1) по степеням k."""
    return [c.constant_value() for c in combo.to_kpoly().shift(-1).coeffs]


def rho_constants(v_max: int) -> RhoConstants:
    """
    rho_v = -2 sum_j e_j^{(2v)} y_{v-j}(-1) + 1,
    rho~_v = 2v - sum_j e_j^{(2v)} y~'_{v-j}(-1);
    сверка: rho_v = -s_0^{(v)} = -2 [k^0] y_v(k-1), rho~_v = 2 [k^1] y~_v(k-1).

    Raises:
        IntegralityError: значение не целое.
        ReductionException: пути вычисления разошлись.
    """
    y, yt = y_polys(v_max)
    rho, rho_t, s0, s1t = [], [], [], []
    s_int, st_int, der_int = [], [], []
    for v in range(v_max + 1):
        acc = Fraction(0)
        acc_t = Fraction(0)
        derivative_ok = True
        for j in range(1, v + 1):
            e = e_coeff(2 * v, j)
            acc += e * y[v - j].evaluate(-1)
            d = yt[v - j].derivative().evaluate(-1)
            derivative_ok = derivative_ok and Fraction(d).denominator == 1
            acc_t += e * d
        r = _as_integer(-2 * acc + 1, f"rho_{v}")
        rt = _as_integer(2 * v - acc_t, f"rho~_{v}")

        sy = shifted_coefficients(y[v])
        syt = shifted_coefficients(yt[v])
        s0_v = _as_integer(2 * sy[0], f"s_0^({v})")
        s1_v = _as_integer(syt[1] if len(syt) > 1 else 0, f"s~_1^({v})")
        if -s0_v != r or 2 * s1_v != rt:
            raise ReductionException(f"Пути вычисления rho расходятся при v={v}")

        rho.append(r)
        rho_t.append(rt)
        s0.append(s0_v)
        s1t.append(s1_v)
        s_int.append(all(Fraction(c).denominator == 1 for c in sy[1:]))
        st_int.append(all(Fraction(c).denominator == 1 for c in syt[1:]))
        der_int.append(derivative_ok)
    return RhoConstants(rho, rho_t, s0, s1t, s_int, st_int, der_int)


@dataclass(frozen=True)
class EvenPowerIdentity:
    """(2k+1)^{2v} = alpha L*(x_{2v-1}) + beta sum_j e_j^{(2v-1)} (2k+1)^{2v-2j}."""
    v: int
    epsilon: int
    alpha: RatFunc
    beta: RatFunc

    def left(self) -> KPoly:
        return (2 * K + 1) ** (2 * self.v)

    def right(self) -> KPoly:
        op = delannoy_operator(self.epsilon)
        out = op.adjoint_apply((2 * K + 3) ** (2 * self.v - 1)) * self.alpha
        for j in range(1, self.v + 1):
            out = out + (2 * K + 1) ** (2 * self.v - 2 * j) * (self.beta * e_coeff(2 * self.v - 1, j))
        return out

    def check(self) -> bool:
        return self.left() == self.right()


def delannoy_even_power_identity(v: int, epsilon: int = 1) -> EvenPowerIdentity:
    """Разложение (2k+1)^{2v}, v >= 1: alpha = 1/A, beta = -2/A, A = -2 eps z - eps + 1."""
    if v < 1:
        raise DomainError(f"v должно быть >= 1, получено {v}")
    a = leading_factor(epsilon)
    return EvenPowerIdentity(v, epsilon, a.inverse(), a.inverse() * -2)


def odd_power_witness(v: int, epsilon: int = 1) -> KPoly:
    """
    y_v (eps = 1) или y~_v (eps = -1) как многочлен от k:
    L*(y) = (2k+1)^{2v+1} для оператора при z = 1.
    """
    _check_epsilon(epsilon)
    y, yt = y_polys(v)
    return (y if epsilon == 1 else yt)[v].to_kpoly()


def check_odd_power_witness(v: int, epsilon: int = 1) -> bool:
    op = delannoy_operator(epsilon, z=1)
    return op.adjoint_apply(odd_power_witness(v, epsilon)) == (2 * K + 1) ** (2 * v + 1)

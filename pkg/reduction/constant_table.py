# reduction/constant_table.py
"""
Таблица констант c_v, c~_v, rho_v, rho~_v, s_0^(v), s~_1^(v).
Строится один раз на процесс и дальше только читается.
"""
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any, Dict, List, Mapping

from arith.ratfunc import RatFunc
from arith.zpoly import ZPoly
from reduction.delannoy_reduction import c_constants, rho_constants
from utils.exceptions import DomainError


def cleared_numerator(value: RatFunc, factor: ZPoly, v: int) -> ZPoly:
    """factor^v * value как многочлен; DomainError, если не делится."""
    scaled = value * RatFunc.coerce(factor ** v)
    if not scaled.is_polynomial():
        raise DomainError(f"{value} не лежит в ({factor})^-{v} Q[z]")
    return scaled.numerator.scale(1 / scaled.denominator.constant_term())


def _over(num: ZPoly, den: str, v: int) -> str:
    """Строка вида p(z)/den^v для печати таблицы."""
    if v == 0:
        return str(num)
    text = f"({num})" if len(num.terms()) > 1 else str(num)
    power = den if v == 1 else f"{den}^{v}"
    return f"{text}/{power}"


@dataclass(frozen=True)
class ConstantTable:
    v_max: int
    c: List[RatFunc]
    c_tilde: List[RatFunc]
    rho: List[int]
    rho_tilde: List[int]
    s0: List[int]
    s1_tilde: List[int]

    def c_numerator(self, v: int) -> ZPoly:
        """z^v c_v."""
        return cleared_numerator(self.c[v], ZPoly.variable(), v)

    def c_tilde_numerator(self, v: int) -> ZPoly:
        """(z+1)^v c~_v."""
        return cleared_numerator(self.c_tilde[v], ZPoly.linear(1, 1), v)

    def with_rho_override(self, overrides: Mapping[int, int]) -> "ConstantTable":
        """Копия с заменёнными rho_v (для отрицательного контроля)."""
        rho = list(self.rho)
        for v, value in overrides.items():
            if not 0 <= v < len(rho):
                raise DomainError(f"rho_{v} вне таблицы (v_max={self.v_max})")
            rho[v] = value
        return replace(self, rho=rho)

    def rows(self) -> List[Dict[str, Any]]:
        out = []
        for v in range(self.v_max + 1):
            out.append({
                "v": v,
                "c": _over(self.c_numerator(v), "z", v),
                "c_tilde": _over(self.c_tilde_numerator(v), "(z + 1)", v),
                "rho": self.rho[v],
                "rho_tilde": self.rho_tilde[v],
                "s0": self.s0[v],
                "s1_tilde": self.s1_tilde[v],
            })
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {"v_max": self.v_max, "rows": self.rows()}


@lru_cache(maxsize=8)
def build_constant_table(v_max: int) -> ConstantTable:
    if v_max < 0:
        raise DomainError(f"v_max должно быть >= 0, получено {v_max}")
    c, ct = c_constants(v_max)
    rc = rho_constants(v_max)
    return ConstantTable(
        v_max=v_max,
        c=c,
        c_tilde=ct,
        rho=rc.rho,
        rho_tilde=rc.rho_tilde,
        s0=rc.s0,
        s1_tilde=rc.s1_tilde,
    )

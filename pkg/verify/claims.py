# verify/claims.py
"""
Проверка отдельных сравнений прямым вычислением.

Каждая функция возвращает CongruenceReport (или список) и не пишет в лог:
функции выполняются в рабочих процессах движка.
"""
from math import gcd
from typing import List, Optional

from arith.integers import is_prime, legendre, mod_inverse
from reduction.constant_table import ConstantTable, build_constant_table
from reduction.delannoy_reduction import adjoint_closed_form
from sequences.delannoy import DelannoyIterator, large_schroder_number
from sequences.trinomial import TrinomialIterator
from utils.exceptions import ClaimPreconditionError
from verify.report import Claim, CongruenceReport, Status
from verify.sums import PowerParity, sum_weighted


def _table(table: Optional[ConstantTable], v: int) -> ConstantTable:
    if table is not None and table.v_max >= v:
        return table
    return build_constant_table(max(v, 5))


def _check_epsilon(epsilon: int) -> None:
    if epsilon not in (1, -1):
        raise ClaimPreconditionError(f"epsilon должен быть +1 или -1, получено {epsilon}")


def _status(lhs: int, rhs: int) -> Status:
    return Status.VERIFIED if lhs == rhs else Status.FAILED


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ClaimPreconditionError(f"p должно быть нечётным простым, получено {p}")


def verify_theorem_1_1(n: int, z: int, v: int, epsilon: int = 1,
                       table: Optional[ConstantTable] = None) -> CongruenceReport:
    """
    sum (2k+1)^{2v} F_k(z) = c_v sum F_k(z) (mod n), F_k = eps^k D_k(z).
    Знаменатель c_v снимается домножением обеих сторон на z^v
    (для eps = -1 на (z+1)^v).
    """
    _check_epsilon(epsilon)
    if n < 1:
        raise ClaimPreconditionError(f"n должно быть >= 1, получено {n}")
    params = {"epsilon": epsilon, "n": n, "z": z, "v": v}
    base = z if epsilon == 1 else z + 1
    if z in (0, -1) or gcd(n, 2 * base) != 1:
        return CongruenceReport.make(Claim.THM1_1, params, Status.NOT_APPLICABLE, modulus=n)

    t = _table(table, v)
    numerator = t.c_numerator(v) if epsilon == 1 else t.c_tilde_numerator(v)
    weighted = sum_weighted(n, v, epsilon, z, PowerParity.EVEN, n)
    plain = sum_weighted(n, 0, epsilon, z, PowerParity.EVEN, n)
    lhs = pow(base, v, n) * weighted % n
    rhs = numerator.evaluate_mod(z, n) * plain % n
    return CongruenceReport.make(Claim.THM1_1, params, _status(lhs, rhs), lhs=lhs, rhs=rhs, modulus=n)


def verify_theorem_1_2(p: int, z: int, v: int, epsilon: int = 1,
                       table: Optional[ConstantTable] = None) -> CongruenceReport:
    """
    sum_{k<p} (2k+1)^{2v} D_k(z) = c_v (-z/p) (mod p);
    для eps = -1: c~_v ((z+1)/p).
    """
    _check_epsilon(epsilon)
    _check_odd_prime(p)
    params = {"epsilon": epsilon, "p": p, "z": z, "v": v}
    base = z if epsilon == 1 else z + 1
    if base % p == 0:
        return CongruenceReport.make(Claim.THM1_2, params, Status.NOT_APPLICABLE, modulus=p)

    t = _table(table, v)
    constant = t.c[v] if epsilon == 1 else t.c_tilde[v]
    symbol = legendre(-z, p) if epsilon == 1 else legendre(z + 1, p)
    lhs = sum_weighted(p, v, epsilon, z, PowerParity.EVEN, p)
    rhs = constant.evaluate_mod(z, p) * symbol % p
    return CongruenceReport.make(Claim.THM1_2, params, _status(lhs, rhs), lhs=lhs, rhs=rhs, modulus=p)


def _theorem_1_3_sides(n: int, v: int, epsilon: int, table: ConstantTable):
    modulus = n ** 3
    lhs = sum_weighted(n, v, epsilon, 1, PowerParity.ODD, modulus)
    if epsilon == 1:
        rhs = table.rho[v] * n % modulus
    else:
        rhs = table.rho_tilde[v] * n * n % modulus
    return lhs, rhs, modulus


def verify_theorem_1_3(a: int, v: int, epsilon: int = 1,
                       table: Optional[ConstantTable] = None) -> CongruenceReport:
    """
    n = 2^a: sum (2k+1)^{2v+1} D_k = rho_v n (mod n^3),
    sum (-1)^k (2k+1)^{2v+1} D_k = rho~_v n^2 (mod n^3).
    """
    _check_epsilon(epsilon)
    if a < 1:
        raise ClaimPreconditionError(f"a должно быть >= 1, получено {a}")
    params = {"epsilon": epsilon, "a": a, "v": v}
    lhs, rhs, modulus = _theorem_1_3_sides(2 ** a, v, epsilon, _table(table, v))
    return CongruenceReport.make(Claim.THM1_3, params, _status(lhs, rhs), lhs=lhs, rhs=rhs, modulus=modulus)


def explore_theorem_1_3(n: int, v: int, epsilon: int = 1,
                        table: Optional[ConstantTable] = None) -> CongruenceReport:
    """Те же суммы для произвольного n; только наблюдение."""
    _check_epsilon(epsilon)
    if n < 1:
        raise ClaimPreconditionError(f"n должно быть >= 1, получено {n}")
    params = {"epsilon": epsilon, "n": n, "v": v}
    lhs, rhs, modulus = _theorem_1_3_sides(n, v, epsilon, _table(table, v))
    note = "holds" if lhs == rhs else "differs"
    return CongruenceReport.make(Claim.THM1_3_EXPLORE, params, Status.OBSERVED,
                                 lhs=lhs, rhs=rhs, modulus=modulus, note=note)


POWER2_LEMMAS = ("D(2^a)", "D(2^a+1)", "D(2^a-1)", "S(2^a)", "D-S identity")


def verify_power2_lemmas(a: int) -> List[CongruenceReport]:
    """
    D_{2^a} = 1, D_{2^a+1} = 3 + 2^{a+2}, D_{2^a-1} = -1 (mod 4^{a+1}),
    S_{2^a} = 2 - 2^{a+1} (mod 2^{2a+1}),
    D_{2^a-1} = D_{2^a+1} - 2(2^{a+1}+1) S_{2^a} (точно).
    """
    if a < 2:
        raise ClaimPreconditionError(f"a должно быть >= 2, получено {a}")
    n = 2 ** a
    stream = DelannoyIterator(1)
    d_minus = stream.nth(n - 1)
    d_mid = stream.nth(n)
    d_plus = stream.nth(n + 1)
    s_mid = large_schroder_number(n)

    m4 = 4 ** (a + 1)
    m2 = 2 ** (2 * a + 1)
    checks = [
        (d_mid % m4, 1 % m4, m4),
        (d_plus % m4, (3 + 2 ** (a + 2)) % m4, m4),
        (d_minus % m4, -1 % m4, m4),
        (s_mid % m2, (2 - 2 ** (a + 1)) % m2, m2),
        (d_minus, d_plus - 2 * (2 ** (a + 1) + 1) * s_mid, None),
    ]
    return [
        CongruenceReport.make(Claim.POWER2, {"a": a, "lemma": name}, _status(lhs, rhs),
                              lhs=lhs, rhs=rhs, modulus=modulus)
        for name, (lhs, rhs, modulus) in zip(POWER2_LEMMAS, checks)
    ]


def verify_sun_trinomial(p: int, b: int, c: int, m: int) -> CongruenceReport:
    """sum_{k<p} T_k(b,c) / m^k = (((m-b)^2 - 4c)/p) (mod p)."""
    _check_odd_prime(p)
    if m % p == 0:
        raise ClaimPreconditionError(f"m = {m} делится на p = {p}")
    params = {"p": p, "b": b, "c": c, "m": m}
    inv_m = mod_inverse(m, p)
    lhs = 0
    weight = 1
    stream = TrinomialIterator(b, c)
    for _ in range(p):
        lhs = (lhs + next(stream) * weight) % p
        weight = weight * inv_m % p
    rhs = legendre((m - b) ** 2 - 4 * c, p) % p
    return CongruenceReport.make(Claim.SUN_TRINOMIAL, params, _status(lhs, rhs), lhs=lhs, rhs=rhs, modulus=p)


def verify_corollary(n: int, z: int, s: int, epsilon: int = 1) -> CongruenceReport:
    """sum_{k<n} L*(x_s)(k) F_k(z) = 0 (mod n) для x_s = (2k+3)^s."""
    _check_epsilon(epsilon)
    if n < 1:
        raise ClaimPreconditionError(f"n должно быть >= 1, получено {n}")
    params = {"epsilon": epsilon, "n": n, "z": z, "s": s}
    combo = adjoint_closed_form(s, epsilon)
    coeffs = [(i, c.evaluate(z)) for i, c in combo.items()]
    lhs = 0
    stream = DelannoyIterator(z, epsilon)
    for k in range(n):
        f = next(stream)
        value = sum(int(c) * (2 * k + 1) ** i for i, c in coeffs)
        lhs = (lhs + value * f) % n
    return CongruenceReport.make(Claim.COR2_1, params, _status(lhs, 0), lhs=lhs, rhs=0, modulus=n)

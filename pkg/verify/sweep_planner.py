# verify/sweep_planner.py
"""
Планировщик прогона: разворачивает SweepSpec в список задач,
по одной на набор параметров.
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from arith.integers import odd_primes_in
from config.config_model import SweepSpec
from reduction.constant_table import ConstantTable
from verify import claims
from verify.report import Claim, CongruenceReport


@dataclass(frozen=True)
class SweepTask:
    """Одна проверка: утверждение и значения параметров."""
    claim: Claim
    params: Tuple[Tuple[str, int], ...]

    @property
    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)


class SweepPlanner:
    """
    Планировщик прогона.
    """

    @staticmethod
    def generate_tasks(spec: SweepSpec) -> List[SweepTask]:
        """
        Задачи в детерминированном порядке. Для p оставляются только
        нечётные простые, для трёхчленов -- m, взаимно простые с p.
        """
        claim = spec.claim
        eps = sorted(set(spec.epsilon), reverse=True)

        def tasks(names, combos):
            return [SweepTask(claim, tuple(zip(names, combo))) for combo in combos]

        if claim is Claim.THM1_1:
            return tasks(("epsilon", "n", "z", "v"), product(eps, spec.n, spec.z, spec.v))
        if claim is Claim.THM1_2:
            primes = odd_primes_in(spec.p)
            return tasks(("epsilon", "p", "z", "v"), product(eps, primes, spec.z, spec.v))
        if claim is Claim.THM1_3:
            return tasks(("epsilon", "a", "v"), product(eps, spec.a, spec.v))
        if claim is Claim.THM1_3_EXPLORE:
            return tasks(("epsilon", "n", "v"), product(eps, spec.n, spec.v))
        if claim is Claim.POWER2:
            return tasks(("a",), product([a for a in spec.a if a >= 2]))
        if claim is Claim.SUN_TRINOMIAL:
            primes = odd_primes_in(spec.p)
            combos = [(p, b, c, m) for p, b, c, m in product(primes, spec.b, spec.c, spec.m) if m % p]
            return tasks(("p", "b", "c", "m"), combos)
        if claim is Claim.COR2_1:
            return tasks(("epsilon", "n", "z", "s"), product(eps, spec.n, spec.z, spec.s))
        raise ValueError(f"Неизвестное утверждение {claim}")


def execute_task(task: SweepTask, table: Optional[ConstantTable] = None) -> List[CongruenceReport]:
    """Выполняет одну задачу. Функция уровня модуля: передаётся в рабочие процессы."""
    p = task.param_dict
    if task.claim is Claim.THM1_1:
        return [claims.verify_theorem_1_1(p["n"], p["z"], p["v"], p["epsilon"], table)]
    if task.claim is Claim.THM1_2:
        return [claims.verify_theorem_1_2(p["p"], p["z"], p["v"], p["epsilon"], table)]
    if task.claim is Claim.THM1_3:
        return [claims.verify_theorem_1_3(p["a"], p["v"], p["epsilon"], table)]
    if task.claim is Claim.THM1_3_EXPLORE:
        return [claims.explore_theorem_1_3(p["n"], p["v"], p["epsilon"], table)]
    if task.claim is Claim.POWER2:
        return claims.verify_power2_lemmas(p["a"])
    if task.claim is Claim.SUN_TRINOMIAL:
        return [claims.verify_sun_trinomial(p["p"], p["b"], p["c"], p["m"])]
    if task.claim is Claim.COR2_1:
        return [claims.verify_corollary(p["n"], p["z"], p["s"], p["epsilon"])]
    raise ValueError(f"Неизвестное утверждение {task.claim}")

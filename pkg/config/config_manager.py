# config/config_manager.py
"""
Разбор диапазонов из командной строки и сборка SweepSpec
со значениями по умолчанию для каждого утверждения.
"""
import re
from typing import Dict, Iterable, List, Mapping, Optional, Union

from pydantic import ValidationError

from config.config_model import SweepSpec
from utils.exceptions import RangeParseError
from verify.report import Claim

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_INT_RE = re.compile(r"^\s*-?\d+\s*$")


def _without(values: Iterable[int], excluded: Iterable[int]) -> List[int]:
    excluded = set(excluded)
    return [x for x in values if x not in excluded]


# Прогоны по умолчанию (приёмочные)
DEFAULT_SWEEPS: Dict[Claim, Dict[str, List[int]]] = {
    Claim.THM1_1: {
        "n": list(range(1, 100, 2)),
        "z": _without(range(-6, 7), (0, -1)),
        "v": list(range(0, 6)),
    },
    Claim.THM1_2: {
        "p": list(range(3, 200)),
        "z": _without(range(-10, 11), (0, -1)),
        "v": list(range(0, 6)),
    },
    Claim.THM1_3: {
        "a": list(range(1, 13)),
        "v": list(range(0, 5)),
    },
    Claim.THM1_3_EXPLORE: {
        "n": list(range(1, 41)),
        "v": list(range(0, 4)),
    },
    Claim.POWER2: {
        "a": list(range(2, 15)),
    },
    Claim.SUN_TRINOMIAL: {
        "p": list(range(3, 98)),
        "b": list(range(-3, 4)),
        "c": list(range(-3, 4)),
        "m": [-2, -1, 1, 2, 3],
    },
    Claim.COR2_1: {
        "n": list(range(1, 65)),
        "z": _without(range(-4, 5), (0, -1)),
        "s": list(range(0, 7)),
    },
}

# Утверждения, входящие в `verify all`
ALL_CLAIMS = (Claim.THM1_1, Claim.THM1_2, Claim.THM1_3, Claim.POWER2, Claim.SUN_TRINOMIAL, Claim.COR2_1)


class ConfigManager:
    """
    Менеджер параметров запуска.
    """

    @staticmethod
    def parse_range(text: str) -> List[int]:
        """
        "lo..hi" (включительно), "a,b,c" или смесь "1..5,9".
        Результат отсортирован, без повторов.
        """
        if text is None or not str(text).strip():
            raise RangeParseError("Пустой диапазон")
        values = set()
        for part in str(text).split(','):
            part = part.strip()
            if not part:
                raise RangeParseError(f"Пустой элемент в диапазоне '{text}'")
            m = _RANGE_RE.match(part)
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                if lo > hi:
                    raise RangeParseError(f"Нижняя граница больше верхней: '{part}'")
                values.update(range(lo, hi + 1))
            elif _INT_RE.match(part):
                values.add(int(part))
            else:
                raise RangeParseError(f"Неверный формат диапазона: '{part}'")
        return sorted(values)

    @staticmethod
    def parse_overrides(items: Optional[Iterable[str]]) -> Dict[int, int]:
        """Список "V=VALUE" -> {V: VALUE}."""
        out: Dict[int, int] = {}
        for item in items or ():
            key, sep, value = item.partition('=')
            if not sep or not _INT_RE.match(key) or not _INT_RE.match(value):
                raise RangeParseError(f"Ожидалось V=VALUE, получено '{item}'")
            out[int(key)] = int(value)
        return out

    @staticmethod
    def build_sweep_spec(claim: Union[str, Claim],
                         ranges: Optional[Mapping[str, Optional[str]]] = None,
                         epsilon: Optional[str] = None,
                         rho_overrides: Optional[Iterable[str]] = None) -> SweepSpec:
        """
        Собирает SweepSpec: явные диапазоны поверх значений по умолчанию.

        Raises:
            RangeParseError: неверная строка диапазона или параметры не прошли проверку.
        """
        try:
            claim = Claim(claim)
        except ValueError as e:
            raise RangeParseError(f"Неизвестное утверждение '{claim}'") from e

        data: Dict[str, object] = {k: list(v) for k, v in DEFAULT_SWEEPS[claim].items()}
        for key, text in (ranges or {}).items():
            if text is not None:
                data[key] = ConfigManager.parse_range(text)
        if epsilon is not None:
            data["epsilon"] = ConfigManager.parse_range(epsilon)
        data["rho_overrides"] = ConfigManager.parse_overrides(rho_overrides)
        try:
            return SweepSpec(claim=claim, **data)
        except ValidationError as e:
            raise RangeParseError(f"Недопустимые параметры прогона: {e}") from e

# verify/report.py
"""
Результат проверки одного набора параметров.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple, Union

ParamValue = Union[int, str]


class Claim(Enum):
    """Проверяемые утверждения."""
    THM1_1 = "thm1.1"
    THM1_2 = "thm1.2"
    THM1_3 = "thm1.3"
    THM1_3_EXPLORE = "thm1.3-explore"
    POWER2 = "power2"
    SUN_TRINOMIAL = "sun-trinomial"
    COR2_1 = "cor2.1"


class Status(Enum):
    VERIFIED = "verified"
    FAILED = "FAILED"
    NOT_APPLICABLE = "not-applicable"
    # только для исследовательского режима, на код возврата не влияет
    OBSERVED = "observed"


@dataclass(frozen=True)
class CongruenceReport:
    """
    Итог проверки: вычеты обеих сторон по модулю modulus.
    modulus = None означает точное сравнение целых.
    """
    claim: Claim
    params: Tuple[Tuple[str, ParamValue], ...]
    status: Status
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    modulus: Optional[int] = None
    note: str = ""
    wall_time: float = field(default=0.0, compare=False)

    @classmethod
    def make(cls, claim: Claim, params: Mapping[str, ParamValue], status: Status, **kwargs: Any) -> "CongruenceReport":
        return cls(claim, tuple(params.items()), status, **kwargs)

    @property
    def param_dict(self) -> Dict[str, ParamValue]:
        return dict(self.params)

    def sort_key(self) -> Tuple[Any, ...]:
        return (self.claim.value, tuple(v for _, v in self.params))

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "claim": self.claim.value,
            "params": self.param_dict,
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "modulus": self.modulus,
        }
        if self.status is Status.OBSERVED:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CongruenceReport":
        return cls(
            claim=Claim(data["claim"]),
            params=tuple(data["params"].items()),
            status=Status(data["status"]),
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            modulus=data.get("modulus"),
            note=data.get("note", ""),
        )

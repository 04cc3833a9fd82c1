# sequences/sequence_spec.py
"""
Описание последовательности для CLI и проверок: семейство, параметры, знак eps.
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, ValidationInfo, field_validator

from sequences.delannoy import DelannoyIterator, delannoy_poly_at, schroder_poly_at
from sequences.schmidt import schmidt_poly
from sequences.trinomial import TrinomialIterator, trinomial
from utils.exceptions import SequenceSpecException


class SequenceFamily(Enum):
    DELANNOY = "delannoy"
    TRINOMIAL = "trinomial"
    SCHMIDT = "schmidt"
    SCHRODER = "schroder"


class SequenceSpec(BaseModel):
    """
    Семейство и параметры последовательности.

    Attributes:
        family: Семейство последовательности.
        z: Параметр z (Delannoy, Schmidt, Schroder).
        b, c: Параметры трёхчленных коэффициентов.
        r: Порядок многочлена Шмидта (r >= 1).
        epsilon: Знак; выдаются члены eps^k * X_k.
    """
    model_config = ConfigDict(frozen=True)

    family: SequenceFamily = Field(..., description="Семейство последовательности")
    z: Any = Field(default=1, description="Целое или Fraction")
    b: int = Field(default=1)
    c: int = Field(default=1)
    r: int = Field(default=1, description="Порядок Шмидта")
    epsilon: int = Field(default=1, description="Знак +1 или -1")

    def __init__(self, **data: Any) -> None:
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise SequenceSpecException(f"Недопустимые параметры последовательности: {e}") from e

    @field_validator('z')
    @classmethod
    def validate_z(cls, v):
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise ValueError(f"z должен быть int или Fraction, получено {type(v).__name__}")
        return int(v) if isinstance(v, Fraction) and v.denominator == 1 else v

    @field_validator('epsilon')
    @classmethod
    def validate_epsilon(cls, v):
        if v not in (1, -1):
            raise ValueError(f"epsilon должен быть +1 или -1, получено {v}")
        return v

    @field_validator('r')
    @classmethod
    def validate_order(cls, v, info: ValidationInfo):
        if info.data.get("family") is SequenceFamily.SCHMIDT and v < 1:
            raise ValueError(f"Порядок Шмидта r должен быть >= 1, получено {v}")
        return v

    def term(self, n: int) -> Any:
        """Член с индексом n (с учётом знака)."""
        if self.family is SequenceFamily.DELANNOY:
            value = delannoy_poly_at(n, self.z)
        elif self.family is SequenceFamily.TRINOMIAL:
            value = trinomial(n, self.b, self.c)
        elif self.family is SequenceFamily.SCHMIDT:
            value = schmidt_poly(self.r, n, self.z)
        else:
            value = schroder_poly_at(n, self.z)
        return value if self.epsilon == 1 or n % 2 == 0 else -value

    def terms(self, indices: Iterable[int]) -> List[Any]:
        """
        Члены по списку индексов. Для рекуррентных семейств при
        возрастающих индексах используется один поток.
        """
        indices = list(indices)
        stream: Optional[Any] = None
        if self.family is SequenceFamily.DELANNOY:
            stream = DelannoyIterator(self.z, self.epsilon)
        elif self.family is SequenceFamily.TRINOMIAL:
            stream = TrinomialIterator(self.b, self.c)
        if stream is None or indices != sorted(indices):
            return [self.term(n) for n in indices]

        out = []
        for n in indices:
            value = stream.nth(n)
            if self.family is SequenceFamily.TRINOMIAL and self.epsilon == -1 and n % 2:
                value = -value
            out.append(value)
        return out

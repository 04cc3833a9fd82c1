# config/config_model.py
"""
Модели параметров запуска. Конфигурационного файла нет: всё состояние
берётся из аргументов командной строки и проверяется pydantic.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from verify.report import Claim
from verify.report_writer import OutputFormat


class SweepSpec(BaseModel):
    """
    Набор параметров одного прогона. Пустой список означает, что
    параметр для данного утверждения не используется.
    """
    model_config = ConfigDict(frozen=True)

    claim: Claim = Field(..., description="Проверяемое утверждение")
    n: List[int] = Field(default_factory=list, description="Значения n (модуль)")
    p: List[int] = Field(default_factory=list, description="Кандидаты в простые p")
    a: List[int] = Field(default_factory=list, description="Показатели a для n = 2^a")
    z: List[int] = Field(default_factory=list, description="Значения параметра z")
    v: List[int] = Field(default_factory=list, description="Индексы v констант")
    s: List[int] = Field(default_factory=list, description="Степени x_s = (2k+3)^s")
    b: List[int] = Field(default_factory=list, description="Параметр b трёхчленов")
    c: List[int] = Field(default_factory=list, description="Параметр c трёхчленов")
    m: List[int] = Field(default_factory=list, description="Знаменатель m в сумме T_k / m^k")
    epsilon: List[int] = Field(default_factory=lambda: [1, -1], description="Знаки eps")
    rho_overrides: Dict[int, int] = Field(default_factory=dict, description="Подмена rho_v (контроль)")

    @field_validator('epsilon')
    @classmethod
    def validate_epsilon(cls, v):
        if not v:
            raise ValueError("Список epsilon пуст")
        for e in v:
            if e not in (1, -1):
                raise ValueError(f"epsilon должен быть +1 или -1, получено {e}")
        return v

    @field_validator('n', 'p', 'a')
    @classmethod
    def validate_positive(cls, v):
        if any(x < 1 for x in v):
            raise ValueError("Значения n, p, a должны быть >= 1")
        return v

    @field_validator('v', 's')
    @classmethod
    def validate_nonnegative(cls, v):
        if any(x < 0 for x in v):
            raise ValueError("Значения v, s должны быть >= 0")
        return v

    @property
    def v_max(self) -> int:
        return max(self.v, default=0)


class CliConfig(BaseModel):
    """Общие параметры вывода и исполнения."""
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="text, json или csv")
    jobs: int = Field(default=1, ge=1, description="Число рабочих процессов")
    out_path: Optional[str] = Field(default=None, description="Файл для отчётов")
    exploratory: bool = Field(default=False, description="Включить исследовательские проверки")

from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator, model_validator

from ..correlator.functions import StepFunction
from ..entities.base import LabModel
from ...common.enumerations import RigidityTime
from ...core.rationals import Rational


class MiddleDecaySpec(LabModel):
    """Параметры проверки затухания на средних временах.

    Attributes:
        epsilon: Доля отступа от краев, 0 < epsilon < 1/2
        samples_per_stage: Количество времен a на этап (концы входят всегда)
        stages: Проверяемые этапы j
        kind: Выбор времен жесткости R_j
        depth: Глубина измельчения (по умолчанию из LabConfig)

    Notes:
        Времена a лежат в [epsilon * R_j, (1 - epsilon) * R_j].
    """
    epsilon: Rational = Field(Fraction(1, 4), description="Доля отступа от краев.")
    samples_per_stage: int = Field(9, ge=2, description="Количество времен на этап.")
    stages: tuple[int, ...] = Field(..., min_length=1, description="Проверяемые этапы.")
    kind: RigidityTime = Field(RigidityTime.RETURN, description="Выбор времен жесткости.")
    depth: Optional[int] = Field(None, ge=0, description="Глубина измельчения.")

    @field_validator("epsilon")
    def validate_epsilon(cls, v: Fraction) -> Fraction:
        if not 0 < v < Fraction(1, 2):
            raise ValueError("epsilon должно лежать в интервале (0, 1/2)")
        return v


class SpecialLimitSpec(LabModel):
    """Параметры проверки специального слабого предела P(T_beta).

    Attributes:
        beta: Сдвиг beta >= 0
        alphas: Положительные числа alpha_1..alpha_m
        stages: Проверяемые этапы j
        f: Первая пробная функция
        g: Вторая пробная функция
        schedule: Общие индексы n_j по этапам; по умолчанию лакунарные индексы для sum(alphas)
        kind: Выбор времен жесткости R_j
        depth: Глубина измельчения (по умолчанию из LabConfig)
    """
    beta: Rational = Field(Fraction(0), description="Сдвиг beta.")
    alphas: tuple[Rational, ...] = Field(..., min_length=1, description="Числа alpha_k.")
    stages: tuple[int, ...] = Field(..., min_length=1, description="Проверяемые этапы.")
    f: StepFunction = Field(..., description="Первая пробная функция.")
    g: StepFunction = Field(..., description="Вторая пробная функция.")
    schedule: Optional[tuple[int, ...]] = Field(
        None, description="Общие индексы n_j в порядке этапов."
    )
    kind: RigidityTime = Field(RigidityTime.RETURN, description="Выбор времен жесткости.")
    depth: Optional[int] = Field(None, ge=0, description="Глубина измельчения.")

    @field_validator("beta")
    def validate_beta(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError("beta должно быть неотрицательным")
        return v

    @field_validator("alphas")
    def validate_alphas(cls, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if any(a <= 0 for a in v):
            raise ValueError("все alpha_k должны быть положительными")
        return v

    @model_validator(mode="after")
    def validate_schedule(self):
        if self.schedule is not None:
            if len(self.schedule) != len(self.stages):
                raise ValueError("длина schedule должна совпадать с числом этапов")
            if any(n < 1 for n in self.schedule):
                raise ValueError("индексы n_j должны быть положительными")
        return self

    @property
    def alpha_sum(self) -> Fraction:
        return sum(self.alphas, Fraction(0))

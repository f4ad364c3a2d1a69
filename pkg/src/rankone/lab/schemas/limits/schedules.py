from fractions import Fraction

from pydantic import Field, field_validator, model_validator

from ..entities.base import LabModel
from ...common.enumerations import RigidityTime
from ...core.rationals import Rational


class LacunaryEntry(LabModel):
    """Строка лакунарного расписания.

    Attributes:
        j: Номер этапа
        rigidity_time: Время жесткости R_j
        n: Индекс n_j >= 1
        defect: alpha * n_j - R_j
    """
    j: int = Field(..., ge=1, description="Номер этапа.")
    rigidity_time: Rational = Field(..., description="Время жесткости R_j.")
    n: int = Field(..., ge=1, description="Индекс n_j.")
    defect: Rational = Field(..., description="Дефект alpha * n_j - R_j.")


class LacunarySchedule(LabModel):
    """Индексы n_j, для которых alpha * n_j отличается от R_j на ограниченную величину.

    Attributes:
        alpha: Положительное число alpha
        kind: Выбор времен жесткости
        entries: Строки по возрастанию j
    """
    alpha: Rational = Field(..., description="Число alpha > 0.")
    kind: RigidityTime = Field(RigidityTime.RETURN, description="Выбор времен жесткости.")
    entries: tuple[LacunaryEntry, ...] = Field(..., description="Строки расписания.")

    @field_validator("alpha")
    def validate_alpha(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("alpha должно быть положительным")
        return v

    @model_validator(mode="after")
    def validate_order(self):
        stages = [entry.j for entry in self.entries]
        if any(a >= b for a, b in zip(stages, stages[1:])):
            raise ValueError("строки расписания должны строго возрастать по j")
        return self

    @property
    def stages(self) -> tuple[int, ...]:
        return tuple(entry.j for entry in self.entries)

    @property
    def defects(self) -> tuple[Fraction, ...]:
        return tuple(entry.defect for entry in self.entries)

    def index(self, j: int) -> int:
        """n_j для этапа j."""
        for entry in self.entries:
            if entry.j == j:
                return entry.n
        raise KeyError(j)

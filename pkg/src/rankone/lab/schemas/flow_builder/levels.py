from fractions import Fraction
from typing import Optional

from pydantic import Field, model_validator

from ..entities.base import LabModel
from ...core.rationals import Rational


class LevelRef(LabModel):
    """Уровень колонны этапа k: высоты [lo, hi) во всю ширину основания.

    Attributes:
        stage: Номер этапа k
        lo: Нижняя высота
        hi: Верхняя высота
    """
    stage: int = Field(
        ..., ge=1, description="Номер этапа."
    )
    lo: Rational = Field(
        ..., description="Нижняя высота."
    )
    hi: Rational = Field(
        ..., description="Верхняя высота."
    )

    @model_validator(mode="after")
    def validate_bounds(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError("уровень должен удовлетворять 0 <= lo < hi")
        return self

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


class LevelSet(LabModel):
    """Объединение непересекающихся полуинтервалов высот колонны этапа J.

    Attributes:
        stage: Номер этапа J
        intervals: Упорядоченные непересекающиеся [a, b) внутри [0, h_J)
        width: Ширина основания w_J
    """
    stage: int = Field(
        ..., ge=1, description="Номер этапа."
    )
    intervals: tuple[tuple[Rational, Rational], ...] = Field(
        ..., description="Полуинтервалы высот."
    )
    width: Rational = Field(
        ..., description="Ширина основания."
    )

    @model_validator(mode="after")
    def validate_intervals(self):
        previous = None
        for a, b in self.intervals:
            if a >= b or a < 0:
                raise ValueError(f"некорректный полуинтервал [{a}, {b})")
            if previous is not None and a < previous:
                raise ValueError("полуинтервалы должны быть упорядочены и не пересекаться")
            previous = b
        return self

    @property
    def length(self) -> Fraction:
        return sum((b - a for a, b in self.intervals), Fraction(0))

    @property
    def measure(self) -> Fraction:
        return self.width * self.length

    def contains(self, y: Fraction) -> bool:
        return any(a <= y < b for a, b in self.intervals)


class PointLocation(LabModel):
    """Точка колонны этапа: высота y и горизонтальная координата x в [0, w).

    Attributes:
        stage: Номер этапа
        y: Высота в колонне
        x: Горизонтальная координата в основании
    """
    stage: int = Field(..., ge=1, description="Номер этапа.")
    y: Rational = Field(..., description="Высота в колонне.")
    x: Rational = Field(Fraction(0), description="Горизонтальная координата.")


class FlowPointResult(LabModel):
    """Результат переноса точки потоком.

    Attributes:
        point: Образ точки или None, если для его нахождения не хватило этапов
        escaped: Образ покинул последнюю построенную колонну
    """
    point: Optional[PointLocation] = Field(None, description="Образ точки.")
    escaped: bool = Field(False, description="Образ не определен построенными этапами.")

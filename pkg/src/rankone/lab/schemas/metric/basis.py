from fractions import Fraction

from pydantic import Field, field_validator

from ..entities.base import LabModel
from ..flow_builder import FlowParams, LevelRef
from ...core.rationals import Rational


class MetricBasis(LabModel):
    """Усеченный набор множеств A_1..A_M конечной меры.

    Attributes:
        sets: Уровни A_i в порядке номеров i = 1..M
        tail_bound: Граница sum_{i>M} 4 * mu(A_i) / 2^i отброшенной части ряда
    """
    sets: tuple[LevelRef, ...] = Field(..., min_length=1, description="Множества A_i.")
    tail_bound: Rational = Field(Fraction(0), description="Граница отброшенного хвоста.")

    @field_validator("tail_bound")
    def validate_tail(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError("граница хвоста отрицательна")
        return v

    @property
    def count(self) -> int:
        return len(self.sets)


class FlowPair(LabModel):
    """Два потока с общей схемой разрезания.

    Attributes:
        first: Поток R
        second: Поток T
    """
    first: FlowParams = Field(..., description="Поток R.")
    second: FlowParams = Field(..., description="Поток T.")

    def swapped(self) -> "FlowPair":
        return FlowPair(first=self.second, second=self.first)

from fractions import Fraction
from typing import Iterable

from pydantic import Field, model_validator

from ..entities.base import LabModel
from ..flow_builder.levels import LevelRef
from ...core.rationals import Rational, parse_rational


class StepTerm(LabModel):
    """Слагаемое ступенчатой функции: коэффициент при индикаторе уровня.

    Attributes:
        level: Уровень колонны
        coef: Рациональный коэффициент
    """
    level: LevelRef = Field(..., description="Уровень колонны.")
    coef: Rational = Field(Fraction(1), description="Коэффициент.")


class StepFunction(LabModel):
    """Рациональная линейная комбинация индикаторов уровней одного этапа.

    Attributes:
        stage: Этап k, к которому относятся все уровни
        terms: Слагаемые (уровни могут пересекаться)

    Notes:
        Уровни этапа k занимают всю ширину w_k, поэтому среднее равно нулю
        ровно тогда, когда sum(coef * (hi - lo)) = 0.
    """
    stage: int = Field(..., ge=1, description="Этап уровней.")
    terms: tuple[StepTerm, ...] = Field(..., min_length=1, description="Слагаемые.")

    @model_validator(mode="after")
    def validate_stage(self):
        for term in self.terms:
            if term.level.stage != self.stage:
                raise ValueError(
                    f"уровень этапа {term.level.stage} в функции этапа {self.stage}"
                )
        return self

    @property
    def mean_zero(self) -> bool:
        return sum((t.coef * t.level.length for t in self.terms), Fraction(0)) == 0

    @property
    def top(self) -> Fraction:
        """Наибольшая высота носителя."""
        return max(t.level.hi for t in self.terms)

    @classmethod
    def indicator(cls, stage: int, lo, hi, coef=1) -> "StepFunction":
        """Функция coef * 1_[lo, hi) этапа stage."""
        return cls.combination(stage, [(lo, hi, coef)])

    @classmethod
    def combination(cls, stage: int, parts: Iterable[tuple]) -> "StepFunction":
        """Функция sum coef * 1_[lo, hi) по тройкам (lo, hi, coef)."""
        return cls(
            stage=stage,
            terms=tuple(
                StepTerm(
                    level=LevelRef(stage=stage, lo=parse_rational(lo), hi=parse_rational(hi)),
                    coef=parse_rational(coef),
                )
                for lo, hi, coef in parts
            ),
        )

    def scaled(self, factor) -> "StepFunction":
        factor = parse_rational(factor)
        return StepFunction(
            stage=self.stage,
            terms=tuple(StepTerm(level=t.level, coef=t.coef * factor) for t in self.terms),
        )

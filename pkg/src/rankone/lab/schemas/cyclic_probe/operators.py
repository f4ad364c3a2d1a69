from fractions import Fraction

from pydantic import Field, field_validator

from ..entities.base import LabModel
from ...core.rationals import Rational


class ProductOperatorSpec(LabModel):
    """Оператор U = T_{alpha_1} ⊗ ... ⊗ T_{alpha_n} и этап его оценки.

    Attributes:
        alphas: Строго возрастающие положительные alpha_k
        stage: Этап измельчения J
    """
    alphas: tuple[Rational, ...] = Field(..., min_length=1, description="Времена сомножителей.")
    stage: int = Field(..., ge=1, description="Этап измельчения.")

    @field_validator("alphas")
    def validate_alphas(cls, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if v[0] <= 0 or any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError("alphas должны строго возрастать и быть положительными")
        return v

    @property
    def arity(self) -> int:
        return len(self.alphas)

    def shifts(self, k: int) -> tuple[Fraction, ...]:
        """Сдвиги степени U^k по сомножителям."""
        return tuple(k * alpha for alpha in self.alphas)

from fractions import Fraction
from typing import Iterable, Optional

from pydantic import Field, field_validator

from ..correlator.functions import StepFunction
from ..entities.base import LabModel
from ...core.rationals import Rational, parse_rational


class TensorFactor(LabModel):
    """Сомножитель элементарного тензора T_t f.

    Attributes:
        function: Ступенчатая функция f
        shift: Сдвиг t, применяемый как T_t f
    """
    function: StepFunction = Field(..., description="Ступенчатая функция.")
    shift: Rational = Field(Fraction(0), description="Сдвиг по времени.")


class ElementaryTensor(LabModel):
    """Элементарный тензор T_{t_1} f_1 ⊗ ... ⊗ T_{t_n} f_n.

    Attributes:
        factors: Сомножители, арность n >= 1
    """
    factors: tuple[TensorFactor, ...] = Field(..., min_length=1, description="Сомножители.")

    @property
    def arity(self) -> int:
        return len(self.factors)

    @classmethod
    def power(
            cls,
            f: StepFunction,
            n: int,
            shifts: Optional[Iterable] = None,
    ) -> "ElementaryTensor":
        """Тензор T_{t_1} f ⊗ ... ⊗ T_{t_n} f (по умолчанию без сдвигов)."""
        shifts = [0] * n if shifts is None else [parse_rational(s) for s in shifts]
        if len(shifts) != n:
            raise ValueError("число сдвигов не совпадает с арностью")
        return cls(factors=tuple(TensorFactor(function=f, shift=s) for s in shifts))


class QjSpec(LabModel):
    """Оператор Q_j = ⊗_k (T_{alpha_k n_j} prod_{m<n} P(T_{alpha_m n_j})).

    Attributes:
        alphas: Строго возрастающие положительные alpha_1 < ... < alpha_n
        n_j: Общий индекс из лакунарного расписания для sum(alphas)
        j: Номер этапа, к которому относится n_j
    """
    alphas: tuple[Rational, ...] = Field(..., min_length=1, description="Числа alpha_k.")
    n_j: int = Field(..., ge=1, description="Индекс n_j.")
    j: int = Field(1, ge=1, description="Номер этапа.")

    @field_validator("alphas")
    def validate_alphas(cls, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if v[0] <= 0 or any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError("alphas должны строго возрастать и быть положительными")
        return v

    @property
    def arity(self) -> int:
        return len(self.alphas)

    @property
    def alpha_sum(self) -> Fraction:
        return sum(self.alphas, Fraction(0))


class SymPowerSpec(LabModel):
    """Параметры симметрических степеней и экспоненты.

    Attributes:
        n: Степень симметрического произведения
        multi_index: Показатели m_1..m_k для произведений T^{⊙m_1} ⊗ ... ⊗ T^{⊙m_k}
        truncation: Порядок усечения N ряда exp
        tail_budget: Допустимая граница хвоста ряда exp
    """
    n: int = Field(1, ge=0, description="Степень.")
    multi_index: tuple[int, ...] = Field(default_factory=tuple, description="Показатели m_i.")
    truncation: int = Field(6, ge=0, description="Порядок усечения N.")
    tail_budget: Rational = Field(Fraction(1), description="Допустимая граница хвоста.")

    @field_validator("multi_index")
    def validate_multi_index(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(m < 0 for m in v):
            raise ValueError("показатели m_i должны быть неотрицательными")
        return v

from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator

from ..entities.base import LabModel
from ..entities.intervals import CorrelationInterval
from ...common.enumerations import FactorSymbol
from ...core.rationals import Rational


class ExpansionTerm(LabModel):
    """Слагаемое разложения сомножителя Q_j.

    Attributes:
        delta: Знаки delta_m из {-1, 0, 1} для сомножителей P(T_{alpha_m n_j})
        beta: beta_k = alpha_k + sum_m delta_m * alpha_m
        shift: Полный сдвиг beta_k * n_j
        coefficient: prod_m weight(delta_m), weight(+-1) = 1/4, weight(0) = 1/2
    """
    delta: tuple[int, ...] = Field(..., description="Знаки delta_m.")
    beta: Rational = Field(..., description="Коэффициент сдвига beta_k.")
    shift: Rational = Field(..., description="Сдвиг beta_k * n_j.")
    coefficient: Rational = Field(..., description="Вес слагаемого.")


class FactorExpansion(LabModel):
    """Разложение k-го сомножителя Q_j на 3^{n-1} сдвигов.

    Attributes:
        k: Номер сомножителя
        alpha: alpha_k
        terms: Слагаемые в лексикографическом порядке delta
    """
    k: int = Field(..., ge=1, description="Номер сомножителя.")
    alpha: Rational = Field(..., description="alpha_k.")
    terms: tuple[ExpansionTerm, ...] = Field(..., description="Слагаемые.")

    @property
    def coefficient_sum(self) -> Fraction:
        return sum((term.coefficient for term in self.terms), Fraction(0))


class QjExpansion(LabModel):
    """Полное разложение Q_j по сомножителям.

    Attributes:
        n_j: Индекс n_j
        alpha_sum: sum(alphas)
        factors: Разложения сомножителей
    """
    n_j: int = Field(..., description="Индекс n_j.")
    alpha_sum: Rational = Field(..., description="Сумма alphas.")
    factors: tuple[FactorExpansion, ...] = Field(..., description="Разложения сомножителей.")


class RelationVector(LabModel):
    """Соотношение sum_i d_i * alpha_i = alpha_n с d_i из {-1, 0, 1}.

    Attributes:
        d: Коэффициенты d_1..d_{n-1}
    """
    d: tuple[int, ...] = Field(..., description="Коэффициенты d_i.")

    @field_validator("d")
    def validate_signs(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(x not in (-1, 0, 1) for x in v):
            raise ValueError("коэффициенты соотношения должны лежать в {-1, 0, 1}")
        return v


class LimitTerm(LabModel):
    """Слагаемое предсказанного предела: коэффициент при ⊗ символов.

    Attributes:
        coefficient: Положительный коэффициент
        pattern: Символы сомножителей
    """
    coefficient: Rational = Field(..., description="Коэффициент.")
    pattern: tuple[FactorSymbol, ...] = Field(..., description="Символы сомножителей.")


class LimitPrediction(LabModel):
    """Символьный слабый предел Q_j.

    Attributes:
        u_symbol: Обозначение сдвига u
        terms: Выжившие слагаемые с различными шаблонами
        b_n: Коэффициент при I ⊗ ... ⊗ I
        c_n: Коэффициент при I ⊗ ... ⊗ I ⊗ T_u
        exclusions_hold: Ни у одного сомножителя k < n нет сдвига beta_k = +-sum(alphas)
    """
    u_symbol: str = Field("u", description="Обозначение сдвига.")
    terms: tuple[LimitTerm, ...] = Field(..., description="Выжившие слагаемые.")
    b_n: Rational = Field(..., description="Коэффициент при I ⊗ ... ⊗ I.")
    c_n: Rational = Field(..., description="Коэффициент при I ⊗ ... ⊗ I ⊗ T_u.")
    exclusions_hold: bool = Field(..., description="Исключения для k < n выполнены.")


class IndependenceReport(LabModel):
    """Результат поиска целочисленного соотношения sum z_i * alpha_i = 0.

    Attributes:
        bound: Граница |z_i| <= bound
        counterexample: Первое найденное соотношение (первая ненулевая координата положительна)
    """
    bound: int = Field(..., ge=1, description="Граница коэффициентов.")
    counterexample: Optional[tuple[int, ...]] = Field(None, description="Найденное соотношение.")

    @property
    def independent(self) -> bool:
        """Соотношений с |z_i| <= bound нет."""
        return self.counterexample is None


class SymProfileRow(LabModel):
    """Корреляция произведения симметрических степеней на степени p оператора.

    Attributes:
        power: Степень p
        enclosure: Оценка prod_k <T_{p alpha_k} f, f>^{m_k}
    """
    power: int = Field(..., description="Степень оператора.")
    enclosure: CorrelationInterval = Field(..., description="Оценка корреляции.")

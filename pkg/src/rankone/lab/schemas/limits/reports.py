from fractions import Fraction

from pydantic import Field

from ..entities.base import LabModel
from ..entities.intervals import CorrelationInterval
from ...core.rationals import Rational


class RigidityRow(LabModel):
    """Оценка ||T_{R_j} f - f||^2 на этапе j.

    Attributes:
        j: Номер этапа
        t: Время жесткости R_j
        eval_stage: Этап измельчения J
        defect: Оценка ||T_t f - f||^2
        ratio: Оценка, деленная на ||f||^2
    """
    j: int = Field(..., description="Номер этапа.")
    t: Rational = Field(..., description="Время жесткости.")
    eval_stage: int = Field(..., description="Этап измельчения.")
    defect: CorrelationInterval = Field(..., description="Оценка дефекта.")
    ratio: CorrelationInterval = Field(..., description="Относительный дефект.")


class MiddleDecayRow(LabModel):
    """Максимум |<T_a f, g>| по выборке средних времен этапа j.

    Attributes:
        j: Номер этапа
        eval_stage: Этап измельчения J
        rigidity_time: R_j
        samples: Выбранные времена a в порядке построения выборки
        max_magnitude: Наибольшая гарантированная верхняя граница |<T_a f, g>|
        argmax: Время, на котором достигнут максимум
        max_mignitude: Наибольшая гарантированная нижняя граница |<T_a f, g>|
    """
    j: int = Field(..., description="Номер этапа.")
    eval_stage: int = Field(..., description="Этап измельчения.")
    rigidity_time: Rational = Field(..., description="Время жесткости.")
    samples: tuple[Rational, ...] = Field(..., description="Выборка времен.")
    max_magnitude: Rational = Field(..., description="Верхняя граница максимума.")
    argmax: Rational = Field(..., description="Время максимума.")
    max_mignitude: Rational = Field(..., description="Нижняя граница максимума.")


class SpecialLimitRow(LabModel):
    """Отклонения <T_{alpha_k n_j} f, g> от <P(T_beta) f, g> на этапе j.

    Attributes:
        j: Номер этапа
        n: Общий индекс n_j
        eval_stage: Этап измельчения J
        target: Оценка <P(T_beta) f, g>
        deviations: Оценки разностей по каждому alpha_k
        max_deviation: max_k верхней границы модуля отклонения
    """
    j: int = Field(..., description="Номер этапа.")
    n: int = Field(..., description="Общий индекс n_j.")
    eval_stage: int = Field(..., description="Этап измельчения.")
    target: CorrelationInterval = Field(..., description="Оценка предела.")
    deviations: tuple[CorrelationInterval, ...] = Field(..., description="Отклонения по alpha_k.")
    max_deviation: Rational = Field(..., description="Наибольшее отклонение.")


class SpecialSearchResult(LabModel):
    """Перебор n_j в окрестности лакунарного кандидата.

    Attributes:
        j: Номер этапа
        center: Лакунарный кандидат для sum(alphas)
        best: Индекс с наименьшим максимальным отклонением
        table: Пары (n, максимальное отклонение) в порядке перебора
    """
    j: int = Field(..., description="Номер этапа.")
    center: int = Field(..., description="Кандидат.")
    best: int = Field(..., description="Лучший индекс.")
    table: tuple[tuple[int, Rational], ...] = Field(..., description="Таблица перебора.")


class EvidenceRow(LabModel):
    """Сравнение <T_{alpha n_j} f, g> с <T_{u_hat} f, g> на этапе j.

    Attributes:
        j: Номер этапа
        n: Индекс n_j
        defect: alpha * n_j - R_j
        deviation: Оценка разности корреляций
    """
    j: int = Field(..., description="Номер этапа.")
    n: int = Field(..., description="Индекс n_j.")
    defect: Rational = Field(..., description="Дефект.")
    deviation: CorrelationInterval = Field(..., description="Оценка разности.")


class LimitEstimate(LabModel):
    """Оценка сдвига u в пределе T_{alpha n_j} -> T_u.

    Attributes:
        u_hat: Центр выбранного кластера дефектов
        cluster_tolerance: Допуск кластера
        members: Этапы, дефекты которых попали в кластер
        evidence: Сравнение корреляций по этапам кластера
    """
    u_hat: Rational = Field(..., description="Оценка u.")
    cluster_tolerance: Rational = Field(..., description="Допуск кластера.")
    members: tuple[int, ...] = Field(..., description="Этапы кластера.")
    evidence: tuple[EvidenceRow, ...] = Field(default_factory=tuple, description="Сравнение корреляций.")

    @property
    def max_deviation(self) -> Fraction:
        return max((row.deviation.magnitude for row in self.evidence), default=Fraction(0))

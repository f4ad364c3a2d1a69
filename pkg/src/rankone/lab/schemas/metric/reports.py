from pydantic import Field

from ..entities.base import LabModel
from ...core.rationals import Rational


class MetricEstimate(LabModel):
    """Двусторонняя оценка d(R, T) = max_{s in [0, 1]} rho(R_s, T_s).

    Attributes:
        lower: Максимум гарантированных нижних границ rho по сетке
        estimate: Максимум середин rho по сетке
        upper: Максимум верхних границ плюс L * grid_step / 2
        grid_step: Шаг сетки по s
        lipschitz: Константа L в |rho(s) - rho(s')| <= L |s - s'|
        argmax: Узел сетки с наибольшей серединой
        count: Число множеств базиса
    """
    lower: Rational = Field(..., description="Нижняя оценка.")
    estimate: Rational = Field(..., description="Оценка по серединам.")
    upper: Rational = Field(..., description="Верхняя оценка.")
    grid_step: Rational = Field(..., description="Шаг сетки.")
    lipschitz: Rational = Field(..., description="Константа Липшица.")
    argmax: Rational = Field(..., description="Узел с наибольшей серединой.")
    count: int = Field(..., description="Число множеств базиса.")

    @property
    def width(self) -> Rational:
        return self.upper - self.lower


class TriangleAudit(LabModel):
    """Проверка upper(A, C) <= lower(A, B) + lower(B, C) + суммарная ширина.

    Attributes:
        ab: Оценка d(A, B)
        bc: Оценка d(B, C)
        ac: Оценка d(A, C)
        slack: Сумма ширин трех оценок
        holds: Неравенство выполнено
    """
    ab: MetricEstimate = Field(..., description="Оценка d(A, B).")
    bc: MetricEstimate = Field(..., description="Оценка d(B, C).")
    ac: MetricEstimate = Field(..., description="Оценка d(A, C).")
    slack: Rational = Field(..., description="Суммарная ширина.")
    holds: bool = Field(..., description="Неравенство выполнено.")

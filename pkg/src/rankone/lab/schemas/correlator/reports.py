from typing import Optional

from pydantic import Field

from ..entities.base import LabModel
from ..entities.intervals import CorrelationInterval
from ...core.rationals import Rational


class CorrelationResult(LabModel):
    """Подробный результат вычисления матричного элемента <T_t f, g>.

    Attributes:
        t: Сдвиг по времени
        stage: Этап измельчения J
        enclosure: Гарантированная оценка
        in_column: Точная часть, набранная внутри колонны J
        escape_radius: Объявленная граница вклада вышедшей массы
        normalized: Оценка, деленная на mu_J (только для вероятностного режима)
    """
    t: Rational = Field(..., description="Сдвиг по времени.")
    stage: int = Field(..., description="Этап измельчения.")
    enclosure: CorrelationInterval = Field(..., description="Гарантированная оценка.")
    in_column: Rational = Field(..., description="Точная внутриколонная часть.")
    escape_radius: Rational = Field(..., description="Граница вклада вышедшей массы.")
    normalized: Optional[CorrelationInterval] = Field(
        None, description="Оценка, нормированная на mu_J."
    )

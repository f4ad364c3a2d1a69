from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator

from ..entities.base import LabModel
from ..entities.intervals import CorrelationInterval
from ...core.rationals import Rational, format_rational


def format_value(value) -> str:
    """Рациональные числа - "p/q", вещественные - "%.12e", прочее - str."""
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(Fraction(value))
    if isinstance(value, float):
        return f"{value:.12e}"
    return str(value)


class ReportRecord(LabModel):
    """Запись одной проверки.

    Attributes:
        check_id: Идентификатор проверки вида "<раздел>.<проверка>"
        stage: Этап j, к которому относится запись
        parameters: Входные параметры проверки
        lo: Нижняя граница оценки
        hi: Верхняя граница оценки
        value: Основное значение ("p/q" или "%.12e")
        derived: Производные величины
        passed: Результат сравнения с порогами
    """
    check_id: str = Field(..., min_length=1, description="Идентификатор проверки.")
    stage: Optional[int] = Field(None, description="Этап j.")
    parameters: dict[str, str] = Field(default_factory=dict, description="Входные параметры.")
    lo: Optional[Rational] = Field(None, description="Нижняя граница оценки.")
    hi: Optional[Rational] = Field(None, description="Верхняя граница оценки.")
    value: Optional[str] = Field(None, description="Основное значение.")
    derived: dict[str, str] = Field(default_factory=dict, description="Производные величины.")
    passed: bool = Field(True, description="Проверка пройдена.")

    @field_validator("value", mode="before")
    def validate_value(cls, v):
        if v is None or v == "":
            return None
        return format_value(v)

    @field_validator("parameters", "derived", mode="before")
    def validate_mapping(cls, v):
        if any(not key for key in v):
            raise ValueError("ключи параметров не могут быть пустыми")
        return {str(key): format_value(item) for key, item in v.items()}

    @classmethod
    def interval(cls, check_id: str, enclosure: CorrelationInterval, **kwargs) -> "ReportRecord":
        """Запись с границами оценки и ее серединой в качестве значения."""
        kwargs.setdefault("value", enclosure.mid)
        return cls(check_id=check_id, lo=enclosure.lo, hi=enclosure.hi, **kwargs)


class ReportMetadata(LabModel):
    """Метаданные отчета.

    Attributes:
        tool: Имя инструмента
        version: Версия инструмента
        config_hash: sha256 канонического JSON эффективной конфигурации
        subcommand: Выполненная подкоманда
        experiment: Имя эксперимента
        started_at: Время запуска (только при включенных метках времени)
        finished_at: Время завершения (только при включенных метках времени)
    """
    tool: str = Field("rankone-lab", description="Имя инструмента.")
    version: str = Field(..., description="Версия инструмента.")
    config_hash: str = Field(..., description="Хеш конфигурации.")
    subcommand: str = Field(..., description="Подкоманда.")
    experiment: str = Field("default", description="Имя эксперимента.")
    started_at: Optional[str] = Field(None, description="Время запуска.")
    finished_at: Optional[str] = Field(None, description="Время завершения.")


class Report(LabModel):
    """Отчет эксперимента.

    Attributes:
        metadata: Метаданные
        records: Записи проверок в порядке их постановки
    """
    metadata: ReportMetadata = Field(..., description="Метаданные.")
    records: tuple[ReportRecord, ...] = Field(default_factory=tuple, description="Записи проверок.")

    @property
    def failed(self) -> list[ReportRecord]:
        return [record for record in self.records if not record.passed]

    @property
    def errors(self) -> list[ReportRecord]:
        return [record for record in self.records if record.check_id.endswith(".error")]

    @property
    def exit_code(self) -> int:
        """0 - все проверки пройдены, 2 - есть непройденные, 1 - есть ошибки."""
        if self.errors:
            return 1
        if self.failed:
            return 2
        return 0

from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator, model_validator

from ..entities.base import LabModel
from ...common.enumerations import MeasureMode, SpacerKind
from ...core.rationals import Rational


class SpacerRule(LabModel):
    """Правило высот прокладок s_j(i), i = 1..r_j.

    Attributes:
        kind: Семейство правила (constant, staircase, custom)
        value: Параметр семейств constant и staircase
        table: Явные высоты прокладок по этапам для семейства custom
        offset_h: Увеличивать каждую прокладку на h_j (сигма-конечная модификация)
    """
    kind: SpacerKind = Field(
        SpacerKind.CONSTANT, description="Семейство правила прокладок."
    )
    value: Rational = Field(
        Fraction(0), description="Высота прокладки (constant) или шаг лестницы (staircase)."
    )
    table: tuple[tuple[Rational, ...], ...] = Field(
        default_factory=tuple, description="Высоты прокладок по этапам, table[j-1][i-1] = s_j(i)."
    )
    offset_h: bool = Field(
        False, description="Добавлять h_j к каждой прокладке."
    )

    @model_validator(mode="after")
    def validate_table(self):
        if self.kind == SpacerKind.CUSTOM and not self.table:
            raise ValueError("для правила custom требуется таблица прокладок")
        return self

    def base_spacers(self, j: int, r: int) -> tuple[Fraction, ...]:
        """Высоты прокладок этапа j без сигма-конечной добавки.

        Raises:
            ValueError: Таблица custom не покрывает этап или длина строки не равна r
        """
        if self.kind == SpacerKind.CONSTANT:
            return (self.value,) * r
        if self.kind == SpacerKind.STAIRCASE:
            return tuple(self.value * i for i in range(r))
        if j > len(self.table):
            raise ValueError(f"таблица прокладок не содержит этап {j}")
        row = self.table[j - 1]
        if len(row) != r:
            raise ValueError(f"этап {j}: ожидалось {r} прокладок, получено {len(row)}")
        return tuple(row)

    def spacers(self, j: int, r: int, h: Fraction) -> tuple[Fraction, ...]:
        """Высоты прокладок s_j(1..r) с учетом флага offset_h."""
        base = self.base_spacers(j, r)
        if self.offset_h:
            return tuple(s + h for s in base)
        return base


class FlowParams(LabModel):
    """Параметры потока ранга один, построенного разрезанием и надстройкой.

    Attributes:
        n_schedule: Показатели n_j, число копий на этапе j равно r_j = 2^{n_j} - 1
        spacer: Правило прокладок
        h1: Высота начальной колонны
        w1: Ширина основания начальной колонны
        measure_mode: Режим нормировки меры
        max_stage: Запрошенный предельный этап
        bit_budget: Предельная битовая длина величин конструкции
        strict_admissibility: Требовать r_j > h_j^j на каждом построенном этапе

    Notes:
        Этап 1 - начальная колонна, переход j строит этап j + 1, поэтому
        фактический последний этап равен min(max_stage, len(n_schedule) + 1).
    """
    n_schedule: tuple[int, ...] = Field(
        ..., min_length=1, description="Показатели n_j >= 1."
    )
    spacer: SpacerRule = Field(
        default_factory=SpacerRule, description="Правило прокладок."
    )
    h1: Rational = Field(
        Fraction(1), description="Высота начальной колонны."
    )
    w1: Rational = Field(
        Fraction(1), description="Ширина основания начальной колонны."
    )
    measure_mode: MeasureMode = Field(
        MeasureMode.PROBABILITY, description="Режим нормировки меры."
    )
    max_stage: int = Field(
        8, ge=1, description="Запрошенный предельный этап."
    )
    bit_budget: int = Field(
        4096, ge=64, description="Предельная битовая длина величин конструкции."
    )
    strict_admissibility: bool = Field(
        False, description="Проверять условие r_j > h_j^j."
    )

    @field_validator("n_schedule")
    def validate_schedule(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(n < 1 for n in v):
            raise ValueError("все показатели n_j должны быть не меньше 1")
        return v

    @field_validator("h1", "w1")
    def validate_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("высота и ширина начальной колонны должны быть положительны")
        return v

    @property
    def last_stage(self) -> int:
        """Последний этап, который можно построить."""
        return min(self.max_stage, len(self.n_schedule) + 1)

    def cuts(self, j: int) -> int:
        """Число копий r_j = 2^{n_j} - 1 на переходе j -> j + 1."""
        return 2 ** self.n_schedule[j - 1] - 1

    @property
    def is_periodic(self) -> bool:
        """Вырожденный поток: все r_j = 1 и нулевые прокладки, то есть поворот по модулю h1."""
        if any(n != 1 for n in self.n_schedule) or self.spacer.offset_h:
            return False
        try:
            return all(
                s == 0
                for j in range(1, len(self.n_schedule) + 1)
                for s in self.spacer.base_spacers(j, 1)
            )
        except ValueError:
            return False

    def compatible_with(self, other: "FlowParams") -> bool:
        """Общая схема разрезания: совпадают n_schedule, h1 и w1."""
        return (
            self.n_schedule == other.n_schedule
            and self.h1 == other.h1
            and self.w1 == other.w1
        )


class FlowSpec(LabModel):
    """Структурированное описание потока, из которого строится FlowParams.

    Attributes:
        n_schedule: Показатели n_j
        spacer: Правило прокладок
        h1: Высота начальной колонны
        w1: Ширина основания
        mode: Режим меры
        max_stage: Предельный этап (по умолчанию из LabConfig)
        bit_budget: Бюджет битов (по умолчанию из LabConfig)
        strict_admissibility: Проверять условие r_j > h_j^j
    """
    n_schedule: list[int] = Field(
        ..., description="Показатели n_j."
    )
    spacer: SpacerRule = Field(
        default_factory=SpacerRule, description="Правило прокладок."
    )
    h1: Rational = Field(
        Fraction(1), description="Высота начальной колонны."
    )
    w1: Rational = Field(
        Fraction(1), description="Ширина основания."
    )
    mode: MeasureMode = Field(
        MeasureMode.PROBABILITY, description="Режим меры."
    )
    max_stage: Optional[int] = Field(
        None, ge=1, description="Предельный этап."
    )
    bit_budget: Optional[int] = Field(
        None, ge=64, description="Бюджет битов."
    )
    strict_admissibility: bool = Field(
        False, description="Проверять условие r_j > h_j^j."
    )

"""Конфигурация эксперимента: разделы TOML-файла и их загрузка."""
import hashlib
import json
import tomllib
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Optional

from pydantic import AfterValidator, Field, ValidationError, field_validator, model_validator

from ..common.enumerations import OutputFormat, RigidityTime, SpacerKind, UMode
from ..core import ConfigurationError
from ..core.rationals import Rational
from ..schemas.correlator import StepFunction
from ..schemas.entities import LabModel
from ..schemas.flow_builder import FlowSpec, SpacerRule


def _stage_range(v: tuple[int, ...]) -> tuple[int, ...]:
    if len(v) != 2 or not 1 <= v[0] <= v[1]:
        raise ValueError("диапазон этапов задается парой [first, last] с 1 <= first <= last")
    return v


StageRange = Annotated[tuple[int, ...], AfterValidator(_stage_range)]


class ExperimentSection(LabModel):
    """Раздел [experiment]."""
    name: str = Field("default", min_length=1, description="Имя эксперимента.")


class LimitsSection(LabModel):
    """Раздел [limits].

    Attributes:
        alpha_list: Числа alpha для лакунарных расписаний и специального предела
        beta: Сдвиг beta оператора P(T_beta)
        epsilon: Отступ средних времен от краев
        samples_per_stage: Количество средних времен на этап
        stage_range: Проверяемые этапы [first, last]
        cluster_tol: Допуск кластера дефектов (по умолчанию alpha / 100)
        grid_radius: Радиус перебора индексов вокруг лакунарного кандидата
        kind: Выбор времен жесткости
    """
    alpha_list: tuple[Rational, ...] = Field(
        (Fraction(1), Fraction(3, 2)), min_length=1, description="Числа alpha."
    )
    beta: Rational = Field(Fraction(0), description="Сдвиг beta.")
    epsilon: Rational = Field(Fraction(1, 4), description="Отступ средних времен.")
    samples_per_stage: int = Field(9, ge=2, description="Средних времен на этап.")
    stage_range: StageRange = Field((1, 3), description="Этапы [first, last].")
    cluster_tol: Optional[Rational] = Field(None, description="Допуск кластера.")
    grid_radius: int = Field(2, ge=0, description="Радиус перебора индексов.")
    kind: RigidityTime = Field(RigidityTime.RETURN, description="Выбор времен жесткости.")


    @property
    def stages(self) -> tuple[int, ...]:
        return tuple(range(self.stage_range[0], self.stage_range[1] + 1))


class TensorSection(LabModel):
    """Раздел [tensor].

    Attributes:
        alphas: Числа alpha_1 < ... < alpha_n (по умолчанию 1..n)
        n: Арность (по умолчанию 2 или длина alphas)
        stage_range: Этапы [first, last] для оценки Q_j
        u_mode: Источник сдвига u
        u_fixed: Сдвиг u для режима fixed
    """
    alphas: Optional[tuple[Rational, ...]] = Field(None, min_length=1, description="Числа alpha_k.")
    n: Optional[int] = Field(None, ge=1, description="Арность.")
    stage_range: StageRange = Field((1, 3), description="Этапы [first, last].")
    u_mode: UMode = Field(UMode.ESTIMATE, description="Источник сдвига u.")
    u_fixed: Optional[Rational] = Field(None, description="Сдвиг u для режима fixed.")


    @model_validator(mode="after")
    def validate_arity(self):
        if self.alphas is not None and self.n is not None and len(self.alphas) != self.n:
            raise ValueError(f"tensor.n = {self.n} не совпадает с числом alphas ({len(self.alphas)})")
        if self.u_mode == UMode.FIXED and self.u_fixed is None:
            raise ValueError("для u_mode = fixed требуется tensor.u_fixed")
        return self

    @property
    def resolved_alphas(self) -> tuple[Fraction, ...]:
        if self.alphas is not None:
            return tuple(self.alphas)
        return tuple(Fraction(k) for k in range(1, (self.n or 2) + 1))

    @property
    def stages(self) -> tuple[int, ...]:
        return tuple(range(self.stage_range[0], self.stage_range[1] + 1))


class SymSection(LabModel):
    """Раздел [sym]."""
    truncation_N: int = Field(6, ge=0, description="Порядок усечения ряда exp.")
    multi_index: tuple[int, ...] = Field((1, 1), description="Показатели m_i.")
    tail_budget: Rational = Field(Fraction(1), description="Бюджет хвоста ряда exp.")
    times: tuple[Rational, ...] = Field((Fraction(1, 2),), description="Сдвиги t для exp.")
    powers: tuple[int, ...] = Field((1, 2, 3), description="Степени p для профиля произведений.")
    stage: Optional[int] = Field(None, ge=1, description="Этап оценки (по умолчанию последний).")


class CyclicSection(LabModel):
    """Раздел [cyclic]."""
    K_list: tuple[int, ...] = Field((2, 4, 8), min_length=1, description="Наибольшие степени K.")
    targets: tuple[tuple[Rational, ...], ...] = Field(
        ((Fraction(1, 2), Fraction(1, 3)),), description="Сдвиги сомножителей целевых тензоров."
    )
    tol_rank: float = Field(1e-8, gt=0, lt=1, description="Порог численного ранга.")
    tol_psd: float = Field(1e-9, ge=0, description="Допуск неотрицательности.")
    stage: Optional[int] = Field(None, ge=1, description="Этап оценки (по умолчанию последний).")

    @field_validator("K_list")
    def validate_k(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(k < 0 for k in v):
            raise ValueError("K должны быть неотрицательными")
        return tuple(sorted(v))


class MetricSection(LabModel):
    """Раздел [metric] и список [[metric.partners]] с правилами прокладок сравниваемых потоков.

    Attributes:
        grid_step: Шаг сетки по s
        basis_count: Число множеств базиса
        stage: Этап оценки
        partners: Правила прокладок потоков-партнеров
        random_flows: Число случайных потоков, добавляемых к набору для троек
        triangle_triples: Число случайных троек в проверке неравенства треугольника
    """
    grid_step: Rational = Field(Fraction(1, 4), description="Шаг сетки по s.")
    basis_count: int = Field(3, ge=1, description="Число множеств базиса.")
    stage: int = Field(3, ge=1, description="Этап оценки.")
    partners: tuple[SpacerRule, ...] = Field(
        (
            SpacerRule(kind=SpacerKind.STAIRCASE, value=Fraction(2), offset_h=True),
            SpacerRule(kind=SpacerKind.CONSTANT, value=Fraction(1), offset_h=True),
        ),
        description="Правила прокладок потоков-партнеров.",
    )
    random_flows: int = Field(4, ge=0, description="Случайных потоков в наборе для троек.")
    triangle_triples: int = Field(20, ge=0, description="Случайных троек потоков.")

    @field_validator("grid_step")
    def validate_step(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("шаг сетки должен быть положительным")
        return v


class ProbeFunction(LabModel):
    """Ступенчатая функция в конфигурации: этап и тройки [lo, hi, coef]."""
    stage: int = Field(1, ge=1, description="Этап уровней.")
    terms: tuple[tuple[Rational, Rational, Rational], ...] = Field(..., min_length=1, description="Слагаемые.")

    def build(self) -> StepFunction:
        return StepFunction.combination(self.stage, self.terms)


class ProbesSection(LabModel):
    """Раздел [probes]: пробные функции f и g (по умолчанию g = f)."""
    f: ProbeFunction = Field(
        ProbeFunction(terms=((Fraction(0), Fraction(1, 2), Fraction(1)), (Fraction(1, 2), Fraction(1), Fraction(-1)))),
        description="Пробная функция f.",
    )
    g: Optional[ProbeFunction] = Field(None, description="Пробная функция g.")

    def functions(self) -> tuple[StepFunction, StepFunction]:
        f = self.f.build()
        return f, (self.g.build() if self.g is not None else f)


class ThresholdsSection(LabModel):
    """Раздел [thresholds]: пороги прохождения проверок."""
    rigidity_ratio_max: Rational = Field(Fraction(1), description="Наибольшее ||T_R f - f||^2 / ||f||^2.")
    middle_max: Optional[Rational] = Field(None, description="Наибольший max |<T_a f, g>|.")
    special_max: Optional[Rational] = Field(None, description="Наибольшее отклонение от P(T_beta).")
    require_trends: bool = Field(True, description="Проверять тренды по последним трем этапам.")
    in_span_tolerance: float = Field(1e-10, ge=0, description="Относительная невязка цели из подпространства.")
    residual_tolerance: float = Field(1e-9, ge=0, description="Допуск монотонности невязки по K.")


class OutputSection(LabModel):
    """Раздел [output]."""
    format: OutputFormat = Field(OutputFormat.JSON, description="Формат отчета.")
    path: Optional[str] = Field(None, description="Путь к отчету (по умолчанию stdout).")
    timestamps: bool = Field(False, description="Записывать метки времени в метаданные.")


class ExperimentConfig(LabModel):
    """Описание эксперимента.

    Notes:
        Неизвестные ключи отклоняются; рациональные числа задаются целыми,
        строками "p/q" или десятичными строками с конечной записью.
    """
    experiment: ExperimentSection = Field(default_factory=ExperimentSection)
    flow: FlowSpec = Field(
        default_factory=lambda: FlowSpec(
            n_schedule=[2, 3, 4, 5],
            spacer=SpacerRule(kind=SpacerKind.STAIRCASE, value=Fraction(1), offset_h=True),
        )
    )
    limits: LimitsSection = Field(default_factory=LimitsSection)
    tensor: TensorSection = Field(default_factory=TensorSection)
    sym: SymSection = Field(default_factory=SymSection)
    cyclic: CyclicSection = Field(default_factory=CyclicSection)
    metric: MetricSection = Field(default_factory=MetricSection)
    probes: ProbesSection = Field(default_factory=ProbesSection)
    thresholds: ThresholdsSection = Field(default_factory=ThresholdsSection)
    output: OutputSection = Field(default_factory=OutputSection)

    def config_hash(self) -> str:
        """sha256 канонического JSON конфигурации."""
        canonical = json.dumps(
            self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"), ensure_ascii=False
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def with_overrides(
            self,
            stage_max: Optional[int] = None,
            output_format: Optional[OutputFormat] = None,
            output_path: Optional[str] = None,
    ) -> "ExperimentConfig":
        """Копия с параметрами командной строки."""
        config = self
        if stage_max is not None:
            config = config.model_copy(update={"flow": config.flow.model_copy(update={"max_stage": stage_max})})
        if output_format is not None or output_path is not None:
            output = config.output.model_copy(
                update={
                    key: value
                    for key, value in (("format", output_format), ("path", output_path))
                    if value is not None
                }
            )
            config = config.model_copy(update={"output": output})
        return config


def load_experiment(path: str | Path) -> ExperimentConfig:
    """Читает и проверяет TOML-файл эксперимента.

    Raises:
        ConfigurationError: Файл не читается, не является TOML или не проходит проверку
    """
    try:
        with open(path, "rb") as file:
            data = tomllib.load(file)
    except OSError as error:
        raise ConfigurationError(f"Не удалось прочитать {path}: {error}") from None
    except tomllib.TOMLDecodeError as error:
        raise ConfigurationError(f"Файл {path} не является корректным TOML: {error}") from None
    return parse_experiment(data)


def parse_experiment(data: dict) -> ExperimentConfig:
    """Проверяет словарь конфигурации.

    Raises:
        ConfigurationError: Неизвестные ключи или некорректные значения
    """
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as error:
        details = [
            {"loc": ".".join(str(part) for part in item["loc"]), "msg": item["msg"]}
            for item in error.errors()
        ]
        raise ConfigurationError(f"Некорректная конфигурация: {error.error_count()} ошибок", details) from None

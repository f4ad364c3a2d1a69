"""Рекурсия разрезания и надстройки и кэш построенных этапов."""
import threading
from fractions import Fraction
from typing import TYPE_CHECKING

from .exceptions import (
    ConfigurationError,
    NegativeSpacer,
    NonAdmissibleSchedule,
    StageOverflow,
    UnknownStage,
    UnrefinableStage,
)
from .geometry import CellLayout, Profile, replicate, sweep_profile
from .rationals import bit_size

if TYPE_CHECKING:
    from ..schemas.correlator import StepFunction
    from ..schemas.flow_builder import FlowParams, StageTransition, TowerStage


def initial_stage(params: "FlowParams") -> "TowerStage":
    from ..schemas.flow_builder import TowerStage

    return TowerStage(
        j=1,
        h=params.h1,
        w=params.w1,
        mu=params.h1 * params.w1,
        spacer_mass=Fraction(0),
    )


def admissibility_bound(stage: "TowerStage") -> Fraction:
    """Величина h_j^j из условия r_j > h_j^j."""
    return stage.h ** stage.j


def next_stage(params: "FlowParams", stage: "TowerStage") -> tuple["StageTransition", "TowerStage"]:
    """Строит переход stage.j -> stage.j + 1.

    Raises:
        UnknownStage: Этап уже последний для расписания
        NegativeSpacer: Правило дало отрицательную прокладку
        ConfigurationError: Таблица прокладок не согласована с r_j
        NonAdmissibleSchedule: Нарушено r_j > h_j^j при включенном strict_admissibility
        StageOverflow: Величины превысили бюджет битов
    """
    from ..schemas.flow_builder import StageTransition, TowerStage

    j = stage.j
    if j >= params.last_stage:
        raise UnknownStage(
            f"Этап {j + 1} вне расписания (последний этап {params.last_stage})",
            [{"stage": j + 1, "last_stage": params.last_stage}],
        )

    r = params.cuts(j)
    if params.strict_admissibility and not r > admissibility_bound(stage):
        raise NonAdmissibleSchedule(
            f"Этап {j}: r_j = {r} не превосходит h_j^j",
            [{"stage": j, "r": r, "h": str(stage.h)}],
        )

    try:
        spacers = params.spacer.spacers(j, r, stage.h)
    except ValueError as error:
        raise ConfigurationError(str(error)) from None

    negative = [i + 1 for i, s in enumerate(spacers) if s < 0]
    if negative:
        raise NegativeSpacer(
            f"Этап {j}: отрицательные прокладки с номерами {negative}",
            [{"stage": j, "indices": negative}],
        )

    offsets = []
    height = Fraction(0)
    for s in spacers:
        offsets.append(height)
        height += stage.h + s

    w = stage.w / r
    spacer_mass = w * sum(spacers, Fraction(0))
    mu = stage.mu + spacer_mass

    oversized = max(bit_size(height), bit_size(w), bit_size(mu))
    if oversized > params.bit_budget:
        raise StageOverflow(
            f"Этап {j + 1}: длина величин {oversized} бит превышает бюджет {params.bit_budget}",
            [{"stage": j + 1, "bits": oversized}],
        )

    transition = StageTransition(j=j, r=r, h=stage.h, spacers=spacers, offsets=tuple(offsets))
    return transition, TowerStage(j=j + 1, h=height, w=w, mu=mu, spacer_mass=spacer_mass)


class Tower:
    """Построенные этапы одного потока и кэш профилей функций.

    Этапы и переходы после построения не меняются; расширение и кэш
    защищены блокировкой.
    """

    def __init__(self, params: "FlowParams") -> None:
        self.params = params
        self._stages: list["TowerStage"] = [initial_stage(params)]
        self._transitions: list["StageTransition"] = []
        self._profiles: dict[tuple["StepFunction", int], Profile] = {}
        self._cells: list[CellLayout] = [CellLayout.initial(params.h1)]
        self._lock = threading.RLock()

    @property
    def built(self) -> int:
        return len(self._stages)

    def ensure(self, stage: int) -> None:
        """Достраивает башню до этапа stage включительно."""
        if stage < 1 or stage > self.params.last_stage:
            raise UnknownStage(
                f"Этап {stage} вне диапазона 1..{self.params.last_stage}",
                [{"stage": stage, "last_stage": self.params.last_stage}],
            )
        with self._lock:
            while len(self._stages) < stage:
                transition, following = next_stage(self.params, self._stages[-1])
                self._transitions.append(transition)
                self._stages.append(following)

    def stage(self, j: int) -> "TowerStage":
        self.ensure(j)
        return self._stages[j - 1]

    def transition(self, j: int) -> "StageTransition":
        """Переход j -> j + 1."""
        self.ensure(j + 1)
        return self._transitions[j - 1]

    def stages(self, last: int) -> list["TowerStage"]:
        self.ensure(last)
        return list(self._stages[:last])

    def profile(self, f: "StepFunction", stage: int) -> Profile:
        """Профиль f, измельченный до этапа stage (требуется stage >= f.stage)."""
        key = (f, stage)
        with self._lock:
            cached = self._profiles.get(key)
        if cached is not None:
            return cached

        if stage < f.stage:
            raise UnrefinableStage(
                f"Функция этапа {f.stage} не измельчается до этапа {stage}",
                [{"function_stage": f.stage, "stage": stage}],
            )
        if stage == f.stage:
            column = self.stage(stage).h
            if f.top > column:
                raise UnrefinableStage(
                    f"Уровень функции выходит за колонну этапа {stage} высоты {column}",
                    [{"stage": stage, "top": str(f.top), "height": str(column)}],
                )
            profile = sweep_profile(
                (term.level.lo, term.level.hi, term.coef) for term in f.terms
            )
        else:
            profile = replicate(self.profile(f, stage - 1), self.transition(stage - 1).offsets)

        with self._lock:
            self._profiles.setdefault(key, profile)
        return profile

    def cells(self, stage: int) -> CellLayout:
        """Адресное разбиение колонны этапа stage."""
        self.ensure(stage)
        with self._lock:
            while len(self._cells) < stage:
                j = len(self._cells)
                self._cells.append(self._cells[-1].stacked(j, self._transitions[j - 1].spacers))
            return self._cells[stage - 1]

from fractions import Fraction

from ...core import LabManager, UnknownStage
from ...core.geometry import replicate_intervals
from ...schemas.flow_builder import FlowParams, LevelRef, LevelSet


class RefineLevelMixin(LabManager):
    """Реализует операцию refine_level"""

    def refine_level(
        self: "RefineLevelMixin",
        level: LevelRef,
        target: int,
        params: FlowParams,
    ) -> LevelSet:
        """Находит вхождения уровня этапа k в колонну этапа J >= k.

        Notes:
            • Каждая копия колонны дает отдельный полуинтервал, соседние копии
              не склеиваются, поэтому полная колонна этапа k встречается ровно
              prod_{m=k..J-1} r_m раз.
            • Мера результата равна мере исходного уровня.

        Raises:
            UnknownStage: Этап J меньше k, вне расписания, или уровень выходит за колонну этапа k

        Example:
            occurrences = lab.refine_level(LevelRef(stage=1, lo=0, hi=1), 3, params)
        """
        if target < level.stage:
            raise UnknownStage(
                f"Целевой этап {target} меньше этапа уровня {level.stage}",
                [{"stage": level.stage, "target": target}],
            )
        tower = self._tower(params)
        if level.hi > tower.stage(level.stage).h:
            raise UnknownStage(
                f"Уровень [{level.lo}, {level.hi}) выходит за колонну этапа {level.stage}",
                [{"stage": level.stage}],
            )
        tower.ensure(target)

        intervals: tuple[tuple[Fraction, Fraction], ...] = ((level.lo, level.hi),)
        for j in range(level.stage, target):
            intervals = replicate_intervals(intervals, tower.transition(j).offsets)

        self.logger.debug(f"Уровень этапа {level.stage} измельчен до этапа {target}: {len(intervals)} вхождений")
        return LevelSet(stage=target, intervals=intervals, width=tower.stage(target).w)

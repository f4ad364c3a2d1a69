from typing import Optional

from ...core import LabManager
from ...core.tower import next_stage
from ...schemas.flow_builder import FlowParams, StageTransition, TowerStage


class AdvanceStageMixin(LabManager):
    """Реализует операцию advance_stage"""

    def advance_stage(
        self: "AdvanceStageMixin",
        params: FlowParams,
        stage: TowerStage,
    ) -> TowerStage:
        """Строит этап j + 1 по этапу j в точной рациональной арифметике.

        Notes:
            • h_{j+1} = r_j * h_j + sum_i s_j(i), w_{j+1} = w_j / r_j.
            • mu_{j+1} = mu_j + w_{j+1} * sum_i s_j(i).

        Raises:
            StageOverflow: Величины превысили бюджет битов
            UnknownStage: Этап j последний для расписания

        Example:
            stage_2 = lab.advance_stage(params, lab.tower_stages(params, 1)[0])
        """
        _, following = next_stage(params, stage)
        self.logger.debug(f"Этап {following.j}: h={following.h}, w={following.w}, mu={following.mu}")
        return following

    def stage_transition(
        self: "AdvanceStageMixin",
        params: FlowParams,
        j: int,
    ) -> StageTransition:
        """Геометрия перехода j -> j + 1 (прокладки и высоты копий)."""
        return self._tower(params).transition(j)

    def tower_stages(
        self: "AdvanceStageMixin",
        params: FlowParams,
        last: Optional[int] = None,
    ) -> list[TowerStage]:
        """Этапы 1..last общей башни потока (по умолчанию все этапы расписания)."""
        return self._tower(params).stages(params.last_stage if last is None else last)

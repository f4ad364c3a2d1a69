from typing import Iterable, Optional

from ...common.enumerations import RigidityTime
from ...core import LabManager
from ...schemas.correlator import StepFunction
from ...schemas.flow_builder import FlowParams
from ...schemas.limits import RigidityRow


class CheckRigidityMixin(LabManager):
    """Реализует операцию check_rigidity"""

    def check_rigidity(
        self: "CheckRigidityMixin",
        params: FlowParams,
        f: StepFunction,
        j_range: Iterable[int],
        kind: RigidityTime = RigidityTime.RETURN,
        depth: Optional[int] = None,
    ) -> list[RigidityRow]:
        """Оценки ||T_{R_j} f - f||^2 по этапам, измельчение до J = j + depth.

        Notes:
            Каждая оценка лежит в [0, 4||f||^2]; отношение к ||f||^2 сообщается отдельно.

        Example:
            rows = lab.check_rigidity(params, f, range(2, 5))
        """
        stages = sorted(set(j_range))
        norm = self.norm_sq(params, f)
        rows = []
        for j, t in zip(stages, self.rigidity_times(params, stages, kind)):
            stage = self.evaluation_stage(params, j, depth)
            defect = self.rigidity_defect(params, f, t, stage)
            ratio = defect.scale(1 / norm) if norm else defect
            rows.append(RigidityRow(j=j, t=t, eval_stage=stage, defect=defect, ratio=ratio))
            self.logger.debug(f"Жесткость на этапе {j}: [{ratio.lo}, {ratio.hi}] * ||f||^2")
        return rows

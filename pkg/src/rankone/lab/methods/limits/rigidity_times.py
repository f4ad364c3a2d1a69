from fractions import Fraction
from typing import Iterable

from ...common.enumerations import RigidityTime
from ...core import LabManager
from ...schemas.flow_builder import FlowParams


class RigidityTimesMixin(LabManager):
    """Реализует выбор времен жесткости R_j"""

    def rigidity_times(
        self: "RigidityTimesMixin",
        params: FlowParams,
        stages: Iterable[int],
        kind: RigidityTime = RigidityTime.RETURN,
    ) -> list[Fraction]:
        """Времена жесткости по этапам.

        Notes:
            • `return`: R_j = h_j + s_j(1) - сдвиг, переводящий первую копию
              колонны j во вторую; для периодического потока равен периоду.
            • `cuts`: R_j = r_j буквально.

        Raises:
            UnknownStage: Этап j последний для расписания (нет перехода j -> j + 1)
        """
        tower = self._tower(params)
        times = []
        for j in stages:
            transition = tower.transition(j)
            if kind == RigidityTime.CUTS:
                times.append(Fraction(transition.r))
            else:
                times.append(transition.h + transition.spacers[0])
        return times

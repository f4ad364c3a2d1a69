from fractions import Fraction
from typing import Iterable

from ...common.enumerations import RigidityTime
from ...core import LabManager
from ...core.rationals import parse_rational, round_half_even
from ...schemas.flow_builder import FlowParams
from ...schemas.limits import LacunaryEntry, LacunarySchedule


class LacunaryIndicesMixin(LabManager):
    """Реализует операцию lacunary_indices"""

    def lacunary_indices(
        self: "LacunaryIndicesMixin",
        alpha: Fraction | int | str,
        params: FlowParams,
        j_range: Iterable[int],
        kind: RigidityTime = RigidityTime.RETURN,
    ) -> LacunarySchedule:
        """Индексы n_j = max(1, round(R_j / alpha)) с округлением половин к четному.

        Notes:
            |alpha * n_j - R_j| <= alpha / 2, если R_j >= alpha / 2.

        Example:
            schedule = lab.lacunary_indices(Fraction(3, 2), params, range(1, 5), RigidityTime.CUTS)
        """
        alpha = parse_rational(alpha)
        stages = sorted(set(j_range))
        times = self.rigidity_times(params, stages, kind)

        entries = []
        for j, time in zip(stages, times):
            n = max(1, round_half_even(time / alpha))
            entries.append(LacunaryEntry(j=j, rigidity_time=time, n=n, defect=alpha * n - time))

        self.logger.debug(f"Лакунарные индексы для alpha={alpha}: {[entry.n for entry in entries]}")
        return LacunarySchedule(alpha=alpha, kind=kind, entries=tuple(entries))

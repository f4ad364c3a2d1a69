from fractions import Fraction
from typing import Optional

from ...core import LabManager, NoStableCluster
from ...core.rationals import parse_rational
from ...schemas.correlator import StepFunction
from ...schemas.flow_builder import FlowParams
from ...schemas.limits import EvidenceRow, LacunarySchedule, LimitEstimate


class EstimateUMixin(LabManager):
    """Реализует операцию estimate_u"""

    def estimate_u(
        self: "EstimateUMixin",
        schedule: LacunarySchedule,
        params: FlowParams,
        f: StepFunction,
        g: Optional[StepFunction] = None,
        tolerance: Fraction | int | str | None = None,
        depth: Optional[int] = None,
    ) -> LimitEstimate:
        """Оценивает u в пределе T_{alpha n_j} -> T_u по кластеру дефектов.

        Notes:
            • Кандидаты в центры - сами дефекты; кластер - дефекты в пределах
              допуска от центра (по умолчанию alpha / 100).
            • Выбирается кластер наибольшего размера, при равенстве - содержащий
              самый поздний этап, затем с меньшим центром.
            • Для этапов кластера сравниваются <T_{alpha n_j} f, g> и <T_{u_hat} f, g>.

        Raises:
            NoStableCluster: Наибольший кластер содержит меньше двух этапов
        """
        g = f if g is None else g
        tolerance = schedule.alpha / 100 if tolerance is None else parse_rational(tolerance)
        entries = schedule.entries
        required = min(2, len(entries))

        best_key, best_center, best_members = None, None, ()
        for candidate in entries:
            members = tuple(e.j for e in entries if abs(e.defect - candidate.defect) <= tolerance)
            key = (len(members), max(members, default=0), -candidate.defect)
            if best_key is None or key > best_key:
                best_key, best_center, best_members = key, candidate.defect, members

        if best_center is None or len(best_members) < required:
            self.logger.warning(f"Дефекты {[str(d) for d in schedule.defects]} не образуют кластера")
            raise NoStableCluster(
                f"Дефекты не образуют кластера с допуском {tolerance}",
                [{"defects": [str(d) for d in schedule.defects]}],
            )

        evidence = []
        for entry in entries:
            if entry.j not in best_members:
                continue
            stage = self.evaluation_stage(params, entry.j, depth)
            lacunary = self.correlate(params, f, g, schedule.alpha * entry.n, stage)
            limit = self.correlate(params, f, g, best_center, stage)
            evidence.append(
                EvidenceRow(j=entry.j, n=entry.n, defect=entry.defect, deviation=lacunary - limit)
            )

        self.logger.debug(f"u_hat={best_center}, этапы кластера {list(best_members)}")
        return LimitEstimate(
            u_hat=best_center,
            cluster_tolerance=tolerance,
            members=best_members,
            evidence=tuple(evidence),
        )

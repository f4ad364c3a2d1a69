from fractions import Fraction

from ...core import LabManager
from ...schemas.flow_builder import FlowParams
from ...schemas.metric import FlowPair, MetricBasis, MetricEstimate, TriangleAudit


class AuditTriangleMixin(LabManager):
    """Реализует проверку неравенства треугольника"""

    def audit_triangle(
        self: "AuditTriangleMixin",
        first: FlowParams,
        second: FlowParams,
        third: FlowParams,
        grid_step: Fraction | int | str,
        basis: MetricBasis,
        stage: int,
    ) -> TriangleAudit:
        """Проверяет upper(A, C) <= lower(A, B) + lower(B, C) + сумма ширин трех оценок."""
        ab = self.metric_d(FlowPair(first=first, second=second), grid_step, basis, stage)
        bc = self.metric_d(FlowPair(first=second, second=third), grid_step, basis, stage)
        ac = self.metric_d(FlowPair(first=first, second=third), grid_step, basis, stage)
        return self.triangle_verdict(ab, bc, ac)

    def triangle_verdict(
        self: "AuditTriangleMixin",
        ab: MetricEstimate,
        bc: MetricEstimate,
        ac: MetricEstimate,
    ) -> TriangleAudit:
        """Вердикт по готовым оценкам d(A, B), d(B, C) и d(A, C)."""
        slack = ab.width + bc.width + ac.width
        holds = ac.upper <= ab.lower + bc.lower + slack
        if not holds:
            self.logger.warning(f"Неравенство треугольника нарушено: {ac.upper} > {ab.lower} + {bc.lower} + {slack}")
        return TriangleAudit(ab=ab, bc=bc, ac=ac, slack=slack, holds=holds)

from fractions import Fraction

from ...core import LabManager
from ...core.geometry import square_length, sup_norm
from ...schemas.correlator import StepFunction
from ...schemas.flow_builder import FlowParams


class NormSqMixin(LabManager):
    """Реализует операцию norm_sq"""

    def norm_sq(
        self: "NormSqMixin",
        params: FlowParams,
        f: StepFunction,
    ) -> Fraction:
        """Точное значение ||f||^2 = w_k * sum c^2 * (b - a) по профилю этапа k."""
        tower = self._tower(params)
        return tower.stage(f.stage).w * square_length(tower.profile(f, f.stage))

    def sup_norm(
        self: "NormSqMixin",
        params: FlowParams,
        f: StepFunction,
    ) -> Fraction:
        """Точное значение ||f||_inf."""
        return sup_norm(self._tower(params).profile(f, f.stage))

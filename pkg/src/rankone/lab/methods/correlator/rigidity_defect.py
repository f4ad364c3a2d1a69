from fractions import Fraction

from ...core import LabManager
from ...schemas.correlator import CorrelationInterval, StepFunction
from ...schemas.flow_builder import FlowParams


class RigidityDefectMixin(LabManager):
    """Реализует операцию rigidity_defect"""

    def rigidity_defect(
        self: "RigidityDefectMixin",
        params: FlowParams,
        f: StepFunction,
        t: Fraction | int | str,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка ||T_t f - f||^2 = 2||f||^2 - 2<T_t f, f>.

        Notes:
            Результат пересекается с априорным диапазоном [0, 4||f||^2].

        Raises:
            ShiftTooLarge: |t| >= h_J
            UnrefinableStage: Функция не измельчается до этапа J
        """
        norm = self.norm_sq(params, f)
        correlation = self.correlate(params, f, f, t, stage)
        defect = (-2 * correlation) + 2 * norm
        return defect.clamp(Fraction(0), 4 * norm)

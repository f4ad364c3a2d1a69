from fractions import Fraction
from typing import Optional

from ...common.enumerations import MeasureMode
from ...core import LabManager, ShiftTooLarge
from ...core.geometry import (
    periodic_overlap,
    shifted_overlap,
    strip_mass,
    sup_norm,
    top_strip_mass,
)
from ...core.rationals import parse_rational
from ...schemas.correlator import CorrelationInterval, CorrelationResult, StepFunction
from ...schemas.flow_builder import FlowParams


class CorrelateMixin(LabManager):
    """Реализует операцию correlate"""

    def correlate(
        self: "CorrelateMixin",
        params: FlowParams,
        f: StepFunction,
        g: StepFunction,
        t: Fraction | int | str,
        stage: int,
    ) -> CorrelationInterval:
        """Гарантированная оценка <T_t f, g> по колонне этапа J.

        Notes:
            • Внутри колонны T_t сдвигает высоты на t, эта часть считается точно.
            • Точки, уходящие за верх колонны, не отслеживаются: их вклад
              ограничен радиусом E = min(|f|_inf * |g|(полоса выхода),
              |g|_inf * |f|(полоса входа)), ширина интервала равна 2E.
            • Вырожденный периодический поток - поворот, оценка точная при любом t.

        Raises:
            ShiftTooLarge: |t| >= h_J
            UnrefinableStage: Функции не измельчаются до этапа J
            UnknownStage: Этап J вне расписания

        Example:
            interval = lab.correlate(params, f, g, Fraction(1, 2), 4)
        """
        return self.correlation_result(params, f, g, t, stage).enclosure

    def correlation_result(
        self: "CorrelateMixin",
        params: FlowParams,
        f: StepFunction,
        g: StepFunction,
        t: Fraction | int | str,
        stage: int,
    ) -> CorrelationResult:
        """То же, что `correlate`, с точной частью, радиусом выхода и нормировкой на mu_J."""
        t = parse_rational(t)
        tower = self._tower(params)
        column = tower.stage(stage)
        f_profile = tower.profile(f, stage)
        g_profile = tower.profile(g, stage)

        if params.is_periodic:
            value = column.w * periodic_overlap(f_profile, g_profile, t, column.h)
            radius = Fraction(0)
        else:
            if abs(t) >= column.h:
                raise ShiftTooLarge(
                    f"|t| = {abs(t)} не меньше высоты колонны этапа {stage} ({column.h})",
                    [{"t": str(t), "stage": stage, "height": str(column.h)}],
                )
            value = column.w * shifted_overlap(f_profile, g_profile, t)
            if t > 0:
                radius = column.w * min(
                    sup_norm(f_profile) * top_strip_mass(g_profile, column.h, t),
                    sup_norm(g_profile) * strip_mass(f_profile, Fraction(0), t),
                )
            elif t < 0:
                radius = column.w * min(
                    sup_norm(f_profile) * strip_mass(g_profile, Fraction(0), -t),
                    sup_norm(g_profile) * top_strip_mass(f_profile, column.h, -t),
                )
            else:
                radius = Fraction(0)

        enclosure = CorrelationInterval.around(value, radius)
        normalized = self.normalize(params, enclosure, stage)

        if radius:
            self.logger.debug(f"Корреляция на этапе {stage}, t={t}: радиус выхода {radius}")

        return CorrelationResult(
            t=t,
            stage=stage,
            enclosure=enclosure,
            in_column=value,
            escape_radius=radius,
            normalized=normalized,
        )

    def normalize(
        self: "CorrelateMixin",
        params: FlowParams,
        interval: CorrelationInterval,
        stage: int,
    ) -> Optional[CorrelationInterval]:
        """Оценка, деленная на меру mu_J колонны этапа J.

        Returns:
            None для сигма-конечной меры, где нормировка не определена.
        """
        if params.measure_mode != MeasureMode.PROBABILITY:
            return None
        return interval.scale(1 / self._tower(params).stage(stage).mu)

from fractions import Fraction

from ...core import ConfigurationError, LabManager
from ...core.rationals import parse_rational
from ...schemas.metric import FlowPair, MetricBasis, MetricEstimate


def metric_grid(step: Fraction) -> list[Fraction]:
    """Узлы 0, step, 2 step, ... и 1."""
    grid = []
    s = Fraction(0)
    while s < 1:
        grid.append(s)
        s += step
    grid.append(Fraction(1))
    return grid


class MetricDMixin(LabManager):
    """Реализует операцию metric_d"""

    def metric_d(
        self: "MetricDMixin",
        pair: FlowPair,
        grid_step: Fraction | int | str,
        basis: MetricBasis,
        stage: int,
    ) -> MetricEstimate:
        """Оценка d(R, T) = max_{s in [0, 1]} rho(R_s, T_s) по сетке.

        Notes:
            • Нижняя оценка - наибольшая гарантированная нижняя граница rho в узлах.
            • Верхняя оценка добавляет L * grid_step / 2 с L = 8 * max w(A_i):
              сдвиг уровня ширины w на ds меняет каждую меру симметрической
              разности не больше чем на 2 w ds для каждого потока.

        Raises:
            ConfigurationError: grid_step <= 0
            IncompatibleFlows: Потоки различаются схемой разрезания
        """
        step = parse_rational(grid_step)
        if step <= 0:
            raise ConfigurationError(f"Шаг сетки {step} должен быть положительным", [{"grid_step": str(step)}])

        tower = self._tower(pair.first)
        lipschitz = 8 * max(tower.stage(level.stage).w for level in basis.sets)

        lower = estimate = upper = Fraction(0)
        argmax = Fraction(0)
        for s in metric_grid(step):
            value = self.rho(pair, s, basis, stage)
            lower = max(lower, value.lo)
            upper = max(upper, value.hi)
            if value.mid > estimate:
                estimate, argmax = value.mid, s

        self.logger.debug(f"d на этапе {stage}: [{lower}, {upper}], шаг {step}")
        return MetricEstimate(
            lower=lower,
            estimate=estimate,
            upper=upper + lipschitz * step / 2,
            grid_step=step,
            lipschitz=lipschitz,
            argmax=argmax,
            count=basis.count,
        )

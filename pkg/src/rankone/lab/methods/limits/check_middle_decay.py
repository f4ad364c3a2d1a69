from fractions import Fraction

from ...common.enumerations import MeasureMode
from ...core import LabManager, NotMeanZero
from ...schemas.correlator import StepFunction
from ...schemas.flow_builder import FlowParams
from ...schemas.limits import MiddleDecayRow, MiddleDecaySpec


def van_der_corput(k: int) -> Fraction:
    """k-й член последовательности ван дер Корпута по основанию 2."""
    value, denominator = Fraction(0), 1
    while k:
        denominator *= 2
        k, bit = divmod(k, 2)
        value += Fraction(bit, denominator)
    return value


def middle_times(rigidity_time: Fraction, epsilon: Fraction, count: int) -> tuple[Fraction, ...]:
    """Детерминированная выборка из [eps * R, (1 - eps) * R]: сначала концы, затем ван дер Корпут."""
    lo = epsilon * rigidity_time
    span = (1 - 2 * epsilon) * rigidity_time
    samples = [lo, lo + span]
    k = 1
    while len(samples) < count:
        samples.append(lo + span * van_der_corput(k))
        k += 1
    return tuple(samples)


class CheckMiddleDecayMixin(LabManager):
    """Реализует операцию check_middle_decay"""

    def check_middle_decay(
        self: "CheckMiddleDecayMixin",
        params: FlowParams,
        f: StepFunction,
        g: StepFunction,
        spec: MiddleDecaySpec,
    ) -> list[MiddleDecayRow]:
        """Максимум |<T_a f, g>| по средним временам a каждого этапа.

        Notes:
            • Выборка детерминирована: концы eps * R_j и (1 - eps) * R_j всегда входят.
            • В вероятностном режиме функции обязаны иметь нулевое среднее.

        Raises:
            NotMeanZero: Функция с ненулевым средним в вероятностном режиме
        """
        if params.measure_mode == MeasureMode.PROBABILITY:
            offenders = [name for name, h in (("f", f), ("g", g)) if not h.mean_zero]
            if offenders:
                raise NotMeanZero(
                    f"Функции {offenders} имеют ненулевое среднее",
                    [{"functions": offenders}],
                )

        stages = sorted(set(spec.stages))
        rows = []
        for j, time in zip(stages, self.rigidity_times(params, stages, spec.kind)):
            stage = self.evaluation_stage(params, j, spec.depth)
            samples = middle_times(time, spec.epsilon, spec.samples_per_stage)

            best_upper, best_lower, argmax = Fraction(-1), Fraction(0), samples[0]
            for a in samples:
                enclosure = self.correlate(params, f, g, a, stage)
                if enclosure.magnitude > best_upper:
                    best_upper, argmax = enclosure.magnitude, a
                best_lower = max(best_lower, enclosure.mignitude)

            rows.append(
                MiddleDecayRow(
                    j=j,
                    eval_stage=stage,
                    rigidity_time=time,
                    samples=samples,
                    max_magnitude=best_upper,
                    argmax=argmax,
                    max_mignitude=best_lower,
                )
            )
            self.logger.debug(f"Средние времена этапа {j}: максимум {best_upper} при a={argmax}")
        return rows

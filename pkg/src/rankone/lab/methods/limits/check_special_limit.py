from fractions import Fraction
from typing import Optional

from ...core import LabManager
from ...schemas.correlator import CorrelationInterval
from ...schemas.flow_builder import FlowParams
from ...schemas.limits import SpecialLimitRow, SpecialLimitSpec, SpecialSearchResult


class CheckSpecialLimitMixin(LabManager):
    """Реализует операции check_special_limit и search_special_schedule"""

    def check_special_limit(
        self: "CheckSpecialLimitMixin",
        spec: SpecialLimitSpec,
        params: FlowParams,
    ) -> list[SpecialLimitRow]:
        """Отклонения <T_{alpha_k n_j} f, g> от <P(T_beta) f, g> по этапам.

        Notes:
            • P(T_beta) = (T_beta + 2I + T_{-beta}) / 4.
            • Один и тот же n_j используется для всех alpha_k; по умолчанию это
              лакунарные индексы для sum(alphas).

        Raises:
            ShiftTooLarge: beta или alpha_k * n_j не помещаются в колонну этапа J
        """
        stages = sorted(set(spec.stages))
        schedule = self._shared_schedule(spec, params, stages)

        rows = []
        for j, n in zip(stages, schedule):
            stage = self.evaluation_stage(params, j, spec.depth)
            target = self._special_target(spec, params, stage)
            deviations = tuple(
                self.correlate(params, spec.f, spec.g, alpha * n, stage) - target
                for alpha in spec.alphas
            )
            rows.append(
                SpecialLimitRow(
                    j=j,
                    n=n,
                    eval_stage=stage,
                    target=target,
                    deviations=deviations,
                    max_deviation=max(d.magnitude for d in deviations),
                )
            )
        return rows

    def search_special_schedule(
        self: "CheckSpecialLimitMixin",
        spec: SpecialLimitSpec,
        params: FlowParams,
        j: int,
        radius: int = 2,
    ) -> SpecialSearchResult:
        """Перебирает n в [n_0 - radius, n_0 + radius] вокруг лакунарного кандидата n_0.

        Notes:
            Минимизируется max_k верхней границы |<T_{alpha_k n} f, g> - <P(T_beta) f, g>|;
            при равенстве выбирается n ближе к n_0, затем меньшее.
        """
        center = self.lacunary_indices(spec.alpha_sum, params, [j], spec.kind).index(j)
        stage = self.evaluation_stage(params, j, spec.depth)
        target = self._special_target(spec, params, stage)

        table = []
        for n in range(max(1, center - radius), center + radius + 1):
            bound = max(
                (self.correlate(params, spec.f, spec.g, alpha * n, stage) - target).magnitude
                for alpha in spec.alphas
            )
            table.append((n, bound))

        best = min(table, key=lambda row: (row[1], abs(row[0] - center), row[0]))[0]
        self.logger.debug(f"Перебор индексов на этапе {j}: кандидат {center}, лучший {best}")
        return SpecialSearchResult(j=j, center=center, best=best, table=tuple(table))

    def _shared_schedule(
        self: "CheckSpecialLimitMixin",
        spec: SpecialLimitSpec,
        params: FlowParams,
        stages: list[int],
    ) -> tuple[int, ...]:
        if spec.schedule is not None:
            by_stage = dict(zip(spec.stages, spec.schedule))
            return tuple(by_stage[j] for j in stages)
        lacunary = self.lacunary_indices(spec.alpha_sum, params, stages, spec.kind)
        return tuple(entry.n for entry in lacunary.entries)

    def _special_target(
        self: "CheckSpecialLimitMixin",
        spec: SpecialLimitSpec,
        params: FlowParams,
        stage: int,
        beta: Optional[Fraction] = None,
    ) -> CorrelationInterval:
        """Оценка <P(T_beta) f, g> = (<T_beta f, g> + 2<f, g> + <T_{-beta} f, g>) / 4."""
        beta = spec.beta if beta is None else beta
        forward = self.correlate(params, spec.f, spec.g, beta, stage)
        identity = self.correlate(params, spec.f, spec.g, 0, stage)
        backward = self.correlate(params, spec.f, spec.g, -beta, stage)
        return (forward + 2 * identity + backward).scale(Fraction(1, 4))

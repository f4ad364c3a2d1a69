from typing import Any, Optional

from ...core import LabManager, NonAdmissibleSchedule
from ...core.tower import initial_stage, next_stage, admissibility_bound
from ...schemas.flow_builder import AdmissibilityRow, FlowParams, FlowSpec


class BuildParamsMixin(LabManager):
    """Реализует операцию build_params"""

    def build_params(
        self: "BuildParamsMixin",
        config: FlowSpec | dict[str, Any],
    ) -> FlowParams:
        """Проверяет описание потока и возвращает неизменяемые параметры.

        Notes:
            • Прогоняет рекурсию этапов вхолостую: отрицательные прокладки и
              переполнение бюджета битов обнаруживаются до любых вычислений.
            • При `strict_admissibility` каждая строка таблицы допустимости должна
              удовлетворять r_j > h_j^j.

        Args:
            config: Описание потока по схеме `FlowSpec` или словарь с теми же ключами.

        Returns:
            Параметры потока по схеме `FlowParams`.

        Raises:
            NonAdmissibleSchedule: Нарушено r_j > h_j^j в режиме `strict_admissibility`
            NegativeSpacer: Правило прокладок дало отрицательную высоту

        Example:
            params = lab.build_params({"n_schedule": [2, 3], "spacer": {"kind": "constant", "value": "1"}})
        """
        spec = config if isinstance(config, FlowSpec) else FlowSpec.model_validate(config)
        params = FlowParams(
            n_schedule=tuple(spec.n_schedule),
            spacer=spec.spacer,
            h1=spec.h1,
            w1=spec.w1,
            measure_mode=spec.mode,
            max_stage=spec.max_stage or self._config.max_stage,
            bit_budget=spec.bit_budget or self._config.bit_budget,
            strict_admissibility=spec.strict_admissibility,
        )

        rows = self.admissibility_table(params)
        if params.strict_admissibility:
            failed = [row for row in rows if not row.admissible]
            if failed:
                self.logger.warning(f"Расписание недопустимо на этапах {[row.j for row in failed]}")
                raise NonAdmissibleSchedule(
                    f"Условие r_j > h_j^j нарушено на этапах {[row.j for row in failed]}",
                    [row.model_dump(mode="json") for row in failed],
                )

        self.logger.debug(
            f"Параметры потока приняты: n_schedule={list(params.n_schedule)}, "
            f"последний этап {params.last_stage}"
        )
        return params

    def admissibility_table(
        self: "BuildParamsMixin",
        params: FlowParams,
        last: Optional[int] = None,
    ) -> list[AdmissibilityRow]:
        """Таблица условия r_j > h_j^j по реализованным высотам h_j.

        Args:
            params: Параметры потока.
            last: Последний исходный этап таблицы, по умолчанию все переходы расписания.

        Returns:
            По строке на каждый переход j -> j + 1.
        """
        dry_run = params.model_copy(update={"strict_admissibility": False})
        last = params.last_stage - 1 if last is None else min(last, params.last_stage - 1)

        rows = []
        stage = initial_stage(dry_run)
        for j in range(1, last + 1):
            r = dry_run.cuts(j)
            bound = admissibility_bound(stage)
            rows.append(AdmissibilityRow(j=j, r=r, h=stage.h, bound=bound, admissible=r > bound))
            _, stage = next_stage(dry_run, stage)
        return rows

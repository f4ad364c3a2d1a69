"""Оркестрация эксперимента: группы проверок выполняются в пуле потоков,
результаты собираются в порядке постановки."""
import asyncio
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import TYPE_CHECKING, Optional

from .checks import CHECK_GROUPS, SUBCOMMAND_GROUPS, ExperimentContext
from .config import ExperimentConfig
from ..common.enumerations import Subcommand
from ..core import ConfigurationError, LabError
from ..schemas.reporter import Report, ReportMetadata, ReportRecord

if TYPE_CHECKING:
    from .. import Laboratory


def error_record(group: str, error: LabError) -> ReportRecord:
    """Запись `<группа>.error` для ошибки конфигурации или арифметики."""
    return ReportRecord(
        check_id=f"{group}.error",
        parameters={"code": error.code, "error": type(error).__name__},
        value=error.message,
        passed=False,
    )


def _now(enabled: bool) -> Optional[str]:
    return datetime.now(timezone.utc).isoformat() if enabled else None


class ExperimentRunner:
    """Выполняет подкоманду над конфигурацией эксперимента.

    Args:
        lab: Лаборатория, общая для всех групп проверок
        config: Конфигурация эксперимента
        threads: Размер пула потоков (по умолчанию lab.config.threads)

    Notes:
        Потоки разделяют кэш башен лаборатории. Записи группы формируются
        последовательно, группы объединяются в порядке SUBCOMMAND_GROUPS,
        поэтому число потоков не влияет на отчет.
    """

    def __init__(
            self,
            lab: "Laboratory",
            config: ExperimentConfig,
            threads: Optional[int] = None,
    ) -> None:
        self._lab = lab
        self._config = config
        self._threads = lab.config.threads if threads is None else threads

    @property
    def config(self) -> ExperimentConfig:
        return self._config

    def metadata(self, subcommand: Subcommand, started_at: Optional[str] = None) -> ReportMetadata:
        from ... import __version__

        timestamps = self._config.output.timestamps
        return ReportMetadata(
            version=__version__,
            config_hash=self._config.config_hash(),
            subcommand=subcommand.value,
            experiment=self._config.experiment.name,
            started_at=started_at,
            finished_at=_now(timestamps),
        )

    async def run(self, subcommand: Subcommand | str) -> Report:
        """Выполняет группы проверок подкоманды и собирает отчет."""
        subcommand = Subcommand(subcommand)
        started_at = _now(self._config.output.timestamps)
        groups = SUBCOMMAND_GROUPS[subcommand]

        try:
            context = self._context()
        except LabError as error:
            self._lab.logger.warning(f"Эксперимент не запущен: {error.message}")
            records = [error_record(subcommand.value, error)]
        else:
            loop = asyncio.get_running_loop()
            with ThreadPoolExecutor(max_workers=self._threads) as executor:
                results = await asyncio.gather(
                    *(loop.run_in_executor(executor, self._run_group, name, context) for name in groups)
                )
            records = [record for group in results for record in group]

        report = Report(metadata=self.metadata(subcommand, started_at), records=tuple(records))
        self._lab.logger.info(
            f"Подкоманда {subcommand.value}: {len(report.records)} записей, "
            f"{len(report.failed)} не пройдено, код {report.exit_code}"
        )
        return report

    def _context(self) -> ExperimentContext:
        try:
            params = self._lab.build_params(self._config.flow)
            f, g = self._config.probes.functions()
        except ValueError as error:
            raise ConfigurationError(str(error)) from None
        return ExperimentContext(config=self._config, params=params, f=f, g=g)

    def _run_group(self, name: str, context: ExperimentContext) -> list[ReportRecord]:
        self._lab.logger.debug(f"Группа проверок {name}", extra={"check_id": name})
        try:
            return CHECK_GROUPS[name](self._lab, context)
        except LabError as error:
            self._lab.logger.warning(f"Группа {name} завершилась ошибкой: {error}", extra={"check_id": name})
            return [error_record(name, error)]
        except ValueError as error:
            self._lab.logger.warning(f"Группа {name} получила некорректные данные: {error}", extra={"check_id": name})
            return [error_record(name, ConfigurationError(str(error)))]


def run_experiment(
        lab: "Laboratory",
        subcommand: Subcommand | str,
        config: ExperimentConfig,
        threads: Optional[int] = None,
) -> Report:
    """Синхронная обертка над ExperimentRunner.run.

    Example:
        with Laboratory() as lab:
            report = run_experiment(lab, "theorem", load_experiment("configs/default.toml"))
            print(report.exit_code)
    """
    return asyncio.run(ExperimentRunner(lab, config, threads).run(subcommand))

"""Командная строка `rankone-lab <subcommand> --config PATH`."""
import hashlib
from pathlib import Path
from typing import Optional

import click

from .config import load_experiment
from .emit import emit, write_report
from .runner import error_record, run_experiment
from ..common.enumerations import OutputFormat, Subcommand
from ..core import ConfigurationError, IoFailure, LabConfig
from ..schemas.reporter import Report, ReportMetadata


def _failure_report(subcommand: str, config_path: Path, error: ConfigurationError) -> Report:
    from ... import __version__

    try:
        digest = hashlib.sha256(config_path.read_bytes()).hexdigest()
    except OSError:
        digest = hashlib.sha256(b"").hexdigest()
    return Report(
        metadata=ReportMetadata(version=__version__, config_hash=digest, subcommand=subcommand),
        records=(error_record("config", error),),
    )


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.argument("subcommand", type=click.Choice([item.value for item in Subcommand]))
@click.option(
    "--config", "config_path", required=True,
    type=click.Path(dir_okay=False, path_type=Path), help="TOML-файл эксперимента.",
)
@click.option("--out", "out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Файл отчета.")
@click.option(
    "--format", "output_format", type=click.Choice([item.value for item in OutputFormat]),
    default=None, help="Формат отчета (по умолчанию из [output]).",
)
@click.option("--stage-max", type=click.IntRange(min=1), default=None, help="Предельный этап потока.")
@click.option("--threads", type=click.IntRange(min=1, max=256), default=None, help="Размер пула потоков.")
@click.pass_context
def main(
        ctx: click.Context,
        subcommand: str,
        config_path: Path,
        out: Optional[Path],
        output_format: Optional[str],
        stage_max: Optional[int],
        threads: Optional[int],
) -> None:
    """Запускает проверки SUBCOMMAND и выводит отчет.

    Код выхода: 0 - все проверки пройдены, 2 - есть непройденные проверки,
    1 - ошибка конфигурации, арифметики или записи отчета.
    """
    from .. import Laboratory

    lab_config = LabConfig() if threads is None else LabConfig(threads=threads)
    with Laboratory(name="cli", config=lab_config) as lab:
        try:
            experiment = load_experiment(config_path).with_overrides(
                stage_max=stage_max,
                output_format=None if output_format is None else OutputFormat(output_format),
                output_path=None if out is None else str(out),
            )
        except ConfigurationError as error:
            lab.logger.error(f"Конфигурация {config_path} отклонена: {error.message}")
            report = _failure_report(subcommand, config_path, error)
            fmt = OutputFormat(output_format or OutputFormat.JSON)
            target = out
        else:
            report = run_experiment(lab, subcommand, experiment, threads)
            fmt = experiment.output.format
            target = None if experiment.output.path is None else Path(experiment.output.path)

        text = emit(report, fmt)
        if target is None:
            click.echo(text, nl=False)
        else:
            try:
                write_report(text, target, lab.config, lab.logger)
            except IoFailure as error:
                click.echo(error.message, err=True)
                ctx.exit(1)

    ctx.exit(report.exit_code)


if __name__ == "__main__":
    main()

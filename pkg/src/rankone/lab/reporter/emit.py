"""Сериализация отчета в JSON и CSV, разбор и запись на диск."""
import csv
import io
import json
from logging import Logger
from pathlib import Path

from pydantic import ValidationError
from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_exponential

from ..common.enumerations import OutputFormat
from ..core import ConfigurationError, IoFailure, LabConfig
from ..schemas.reporter import Report, ReportMetadata, ReportRecord

CSV_HEADER = ("check_id", "stage", "param_key", "param_value", "lo", "hi", "value", "pass")
DERIVED_PREFIX = "derived:"


def emit(report: Report, output_format: OutputFormat | str) -> str:
    """Сериализует отчет.

    Notes:
        • JSON повторяет поля Report, рациональные числа записываются как "p/q".
        • CSV начинается со строк метаданных "# ключ=значение", затем заголовок
          CSV_HEADER. Запись открывается строкой с пустым param_key, за ней идут
          параметры и производные величины с префиксом "derived:".
    """
    if OutputFormat(output_format) == OutputFormat.JSON:
        return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"

    buffer = io.StringIO()
    for key, value in report.metadata.model_dump(mode="json").items():
        if value is not None:
            buffer.write(f"# {key}={value}\n")

    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in report.records:
        data = record.model_dump(mode="json")
        stage = "" if record.stage is None else str(record.stage)
        passed = "true" if record.passed else "false"
        writer.writerow(
            (record.check_id, stage, "", "", data["lo"] or "", data["hi"] or "", record.value or "", passed)
        )
        for key, value in record.parameters.items():
            writer.writerow((record.check_id, stage, key, value, "", "", "", passed))
        for key, value in record.derived.items():
            writer.writerow((record.check_id, stage, DERIVED_PREFIX + key, value, "", "", "", passed))
    return buffer.getvalue()


def parse_report(text: str, output_format: OutputFormat | str) -> Report:
    """Восстанавливает отчет из результата emit.

    Raises:
        ConfigurationError: Текст не является отчетом указанного формата
    """
    try:
        if OutputFormat(output_format) == OutputFormat.JSON:
            return Report.model_validate_json(text)
        return _parse_csv(text)
    except (ValidationError, ValueError, KeyError) as error:
        raise ConfigurationError(f"Некорректный отчет: {error}") from None


def _parse_csv(text: str) -> Report:
    lines = text.splitlines()
    metadata = {}
    while lines and lines[0].startswith("# "):
        key, _, value = lines.pop(0)[2:].partition("=")
        metadata[key] = value

    rows = list(csv.reader(lines))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("отсутствует заголовок CSV")

    records: list[dict] = []
    for check_id, stage, key, value, lo, hi, main, passed in rows[1:]:
        if not key:
            records.append(
                {
                    "check_id": check_id,
                    "stage": int(stage) if stage else None,
                    "lo": lo or None,
                    "hi": hi or None,
                    "value": main or None,
                    "parameters": {},
                    "derived": {},
                    "passed": passed == "true",
                }
            )
        elif not records:
            raise ValueError(f"строка параметра {key} до начала записи")
        elif key.startswith(DERIVED_PREFIX):
            records[-1]["derived"][key[len(DERIVED_PREFIX):]] = value
        else:
            records[-1]["parameters"][key] = value

    return Report(
        metadata=ReportMetadata(**metadata),
        records=tuple(ReportRecord(**record) for record in records),
    )


def _create_retry_decorator(config: LabConfig, logger: Logger):
    """Создает декоратор повторов записи на основе конфигурации."""

    def log_retry(retry_state):
        logger.debug(
            f"Попытка [{retry_state.attempt_number}/{config.max_retries}]. Запись вернула ошибку: {retry_state.outcome.exception()}"
        )

    return retry(
        retry=retry_if_exception_type(OSError),
        stop=stop_after_attempt(config.max_retries + 1),
        wait=wait_exponential(
            multiplier=1,
            min=config.retry_min_wait,
            max=config.retry_max_wait
        ),
        after=log_retry,
        reraise=True,
    )


def write_report(text: str, path: str | Path, config: LabConfig, logger: Logger) -> None:
    """Записывает сериализованный отчет, повторяя попытки при ошибках ввода-вывода.

    Raises:
        IoFailure: Запись не удалась после всех повторов
    """
    path = Path(path)

    @_create_retry_decorator(config, logger)
    def _write() -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(text)

    try:
        _write()
    except OSError as error:
        logger.error(f"Не удалось записать отчет {path}: {error}")
        raise IoFailure(f"Не удалось записать отчет {path}: {error}", [{"path": str(path)}]) from None

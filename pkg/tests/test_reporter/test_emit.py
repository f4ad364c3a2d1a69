"""Тесты сериализации и записи отчетов."""
from fractions import Fraction as Q
from pathlib import Path
from unittest.mock import patch

import pytest

from src.rankone.lab.core import ConfigurationError, IoFailure, LabConfig
from src.rankone.lab.reporter import emit, parse_experiment, parse_report, run_experiment, write_report
from src.rankone.lab.reporter.emit import CSV_HEADER
from src.rankone.lab.schemas import CorrelationInterval, Report, ReportMetadata, ReportRecord


@pytest.fixture
def report():
    return Report(
        metadata=ReportMetadata(version="0.3.0", config_hash="ab" * 32, subcommand="rigidity"),
        records=(
            ReportRecord.interval(
                "rigidity.defect",
                CorrelationInterval.bounds(0, Q(4, 9)),
                stage=1,
                parameters={"t": 1, "kind": "return"},
                derived={"defect_lo": 0, "relative": 0.25},
            ),
            ReportRecord(
                check_id="rigidity.trend",
                parameters={"stages": "1,2"},
                value="false",
                passed=False,
            ),
        ),
    )


class TestFormatting:
    """Тесты представления значений."""

    def test_record_values(self, report):
        """Тест строк "p/q" и "%.12e"."""
        record = report.records[0]
        assert record.value == "2/9"
        assert record.parameters == {"t": "1/1", "kind": "return"}
        assert record.derived == {"defect_lo": "0/1", "relative": "2.500000000000e-01"}

    def test_exit_codes(self, report):
        """Тест кода выхода по записям."""
        assert report.exit_code == 2
        error = ReportRecord(check_id="build.error", passed=False)
        assert Report(metadata=report.metadata, records=report.records + (error,)).exit_code == 1
        assert Report(metadata=report.metadata).exit_code == 0


class TestEmit:
    """Тесты форматов JSON и CSV."""

    @pytest.mark.parametrize("output_format", ["json", "csv"])
    def test_round_trip(self, report, output_format):
        """Тест восстановления отчета из текста."""
        assert parse_report(emit(report, output_format), output_format).model_dump() == report.model_dump()

    @pytest.mark.parametrize("output_format", ["json", "csv"])
    def test_empty_report(self, report, output_format):
        """Тест отчета без записей."""
        empty = Report(metadata=report.metadata)
        assert parse_report(emit(empty, output_format), output_format).model_dump() == empty.model_dump()

    def test_json_uses_rational_strings(self, report):
        """Тест записи границ в виде "p/q"."""
        text = emit(report, "json")
        assert '"hi": "4/9"' in text
        assert text.endswith("\n")

    def test_csv_layout(self, report):
        """Тест строк метаданных и заголовка CSV."""
        lines = emit(report, "csv").splitlines()
        assert lines[0] == "# tool=rankone-lab"
        header = next(i for i, line in enumerate(lines) if not line.startswith("# "))
        assert lines[header] == ",".join(CSV_HEADER)
        assert lines[header + 1] == "rigidity.defect,1,,,0/1,4/9,2/9,true"
        assert "rigidity.defect,1,derived:relative,2.500000000000e-01,,,,true" in lines

    @pytest.mark.parametrize(
        "text, output_format",
        [("{not json", "json"), ("garbage", "csv"), ("", "csv")],
    )
    def test_garbage(self, text, output_format):
        """Тест некорректного текста отчета."""
        with pytest.raises(ConfigurationError):
            parse_report(text, output_format)


class TestWriteReport:
    """Тесты записи отчета с повторами."""

    def test_write(self, tmp_path, mock_logger):
        """Тест записи во вложенный каталог."""
        path = tmp_path / "nested" / "report.json"
        write_report("{}\n", path, LabConfig(), mock_logger)
        assert path.read_text(encoding="utf-8") == "{}\n"

    def test_retry_after_os_error(self, tmp_path, mock_logger):
        """Тест повтора после временной ошибки."""
        config = LabConfig(max_retries=2, retry_min_wait=0, retry_max_wait=0)
        with patch.object(Path, "mkdir", side_effect=[OSError("busy"), None]) as mkdir:
            write_report("x", tmp_path / "report.csv", config, mock_logger)
        assert mkdir.call_count == 2
        assert (tmp_path / "report.csv").read_text(encoding="utf-8") == "x"
        mock_logger.debug.assert_called()

    def test_failure(self, tmp_path, mock_logger):
        """Тест ошибки после всех попыток."""
        config = LabConfig(max_retries=0, retry_min_wait=0, retry_max_wait=0)
        with pytest.raises(IoFailure) as exc_info:
            write_report("x", tmp_path, config, mock_logger)
        assert exc_info.value.code == 170
        mock_logger.error.assert_called_once()


GOLDEN = Path(__file__).parent / "golden"


class TestGoldenReport:
    """Сравнение отчета build с эталонными файлами.

    Эталон содержит CONFIG_HASH вместо sha256 конфигурации, остальное
    совпадает побайтно.
    """

    @pytest.mark.parametrize("output_format", ["json", "csv"])
    def test_build(self, lab, experiment_data, output_format):
        """Тест побайтного совпадения с эталоном для потока [2, 2, 2]."""
        config = parse_experiment(experiment_data)
        report = run_experiment(lab, "build", config)

        expected = (GOLDEN / f"build.{output_format}").read_text(encoding="utf-8")
        assert emit(report, output_format) == expected.replace("CONFIG_HASH", config.config_hash())

    def test_golden_parses(self):
        """Тест разбора эталона обратно в отчет."""
        report = parse_report((GOLDEN / "build.json").read_text(encoding="utf-8"), "json")
        assert report.exit_code == 0
        assert [record.value for record in report.records[:4]] == ["1/1", "6/1", "21/1", "66/1"]

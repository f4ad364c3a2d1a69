"""Тесты командной строки."""
import json

import pytest
from click.testing import CliRunner

from src.rankone.lab.reporter import parse_report
from src.rankone.lab.reporter.cli import main

CHEAP_TOML = """
[flow]
n_schedule = [2, 2, 2]

[flow.spacer]
kind = "constant"
value = 1

[limits]
stage_range = [1, 2]
samples_per_stage = 3

[tensor]
alphas = [1, 2]
stage_range = [1, 1]

[cyclic]
K_list = [0, 1, 2]

[metric]
stage = 3
basis_count = 2
grid_step = "1/2"
"""


@pytest.fixture
def runner():
    return CliRunner()


class TestCli:
    """Тесты `rankone-lab <subcommand> --config PATH`."""

    def test_build_to_stdout(self, runner, config_file):
        """Тест вывода JSON-отчета в stdout."""
        result = runner.invoke(main, ["build", "--config", str(config_file(CHEAP_TOML))])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["metadata"]["subcommand"] == "build"
        assert [record["value"] for record in data["records"][:4]] == ["1/1", "6/1", "21/1", "66/1"]

    def test_stage_max(self, runner, config_file):
        """Тест ограничения числа этапов."""
        result = runner.invoke(
            main, ["build", "--config", str(config_file(CHEAP_TOML)), "--stage-max", "2", "--format", "csv"]
        )
        assert result.exit_code == 0
        report = parse_report(result.stdout, "csv")
        ids = [record.check_id for record in report.records]
        assert ids == ["build.stage", "build.stage", "build.admissibility"]

    def test_out_file(self, runner, config_file, tmp_path):
        """Тест записи отчета в файл."""
        out = tmp_path / "reports" / "build.csv"
        result = runner.invoke(
            main, ["build", "--config", str(config_file(CHEAP_TOML)), "--out", str(out), "--format", "csv"]
        )
        assert result.exit_code == 0
        assert result.stdout == ""
        report = parse_report(out.read_text(encoding="utf-8"), "csv")
        assert len(report.records) == 7

    def test_error_exit_code(self, runner, config_file, tmp_path):
        """Тест кода выхода 1 при ошибке группы."""
        text = CHEAP_TOML.replace("n_schedule = [2, 2, 2]", "n_schedule = [2]").replace(
            "stage_range = [1, 2]", "stage_range = [2, 3]"
        )
        out = tmp_path / "rigidity.json"
        result = runner.invoke(main, ["rigidity", "--config", str(config_file(text)), "--out", str(out)])
        assert result.exit_code == 1
        report = parse_report(out.read_text(encoding="utf-8"), "json")
        assert report.records[0].check_id == "rigidity.error"

    def test_invalid_config(self, runner, config_file):
        """Тест отчета об ошибке конфигурации."""
        result = runner.invoke(main, ["build", "--config", str(config_file("[flow]\nbogus = 1\n"))])
        assert result.exit_code == 1
        report = parse_report(result.stdout, "json")
        assert [record.check_id for record in report.records] == ["config.error"]
        assert report.records[0].parameters["error"] == "ConfigurationError"

    def test_missing_config_option(self, runner):
        """Тест обязательного параметра --config."""
        result = runner.invoke(main, ["build"])
        assert result.exit_code == 2

    def test_unknown_subcommand(self, runner, config_file):
        """Тест неизвестной подкоманды."""
        result = runner.invoke(main, ["spectrum", "--config", str(config_file(CHEAP_TOML))])
        assert result.exit_code == 2

    def test_unwritable_out(self, runner, config_file, tmp_path):
        """Тест ошибки записи отчета."""
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        result = runner.invoke(
            main, ["build", "--config", str(config_file(CHEAP_TOML)), "--out", str(blocker / "report.json")]
        )
        assert result.exit_code == 1

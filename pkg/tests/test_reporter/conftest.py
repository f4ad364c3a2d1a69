"""Общие фикстуры для тестирования отчетов и командной строки."""
from unittest.mock import Mock

import pytest

from src.rankone.lab import LabConfig, Laboratory


def cheap_experiment() -> dict:
    """Небольшой эксперимент: поток [2, 2, 2] с прокладками высоты 1."""
    return {
        "flow": {"n_schedule": [2, 2, 2], "spacer": {"kind": "constant", "value": 1}},
        "limits": {"stage_range": [1, 2], "samples_per_stage": 3},
        "tensor": {"alphas": [1, 2], "stage_range": [1, 1]},
        "sym": {"truncation_N": 4, "powers": [1, 2]},
        "cyclic": {"K_list": [0, 1, 2]},
        "metric": {"stage": 3, "basis_count": 2, "grid_step": "1/2"},
    }


@pytest.fixture
def experiment_data():
    return cheap_experiment()


@pytest.fixture
def lab():
    """Лаборатория с одним потоком, закрываемая после теста."""
    with Laboratory(name="reporter", config=LabConfig(threads=1)) as laboratory:
        yield laboratory


@pytest.fixture
def config_file(tmp_path):
    """Записывает TOML-файл эксперимента и возвращает путь к нему."""

    def write(text: str):
        path = tmp_path / "experiment.toml"
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def mock_logger():
    """Создает мок логгера."""
    logger = Mock()
    logger.debug = Mock()
    logger.error = Mock()
    return logger

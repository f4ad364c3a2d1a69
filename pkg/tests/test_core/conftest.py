"""Общие фикстуры для тестирования ядра."""
import pytest

from src.rankone.lab import Laboratory


@pytest.fixture
def lab():
    """Лаборатория, закрываемая после теста."""
    with Laboratory(name="core") as laboratory:
        yield laboratory

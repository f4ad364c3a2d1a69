"""Общие фикстуры для тестирования операций лаборатории."""
import pytest

from src.rankone.lab import Laboratory
from src.rankone.lab.schemas import StepFunction


@pytest.fixture
def lab():
    """Лаборатория, закрываемая после теста."""
    with Laboratory(name="methods") as laboratory:
        yield laboratory


@pytest.fixture
def square():
    """Функция +1 на нижней и -1 на верхней половине начальной колонны."""
    return StepFunction.combination(1, [(0, "1/2", 1), ("1/2", 1, -1)])


@pytest.fixture
def odometer(lab):
    """Поток без прокладок: h = 1, 3, 9."""
    return lab.build_params({"n_schedule": [2, 2]})


@pytest.fixture
def spacer_flow(lab):
    """Один переход с прокладками высоты h_1: h_2 = 6, mu = 2."""
    return lab.build_params(
        {"n_schedule": [2], "spacer": {"kind": "constant", "value": 0, "offset_h": True}}
    )


@pytest.fixture
def rotation(lab):
    """Вырожденный поток: поворот по модулю 1."""
    return lab.build_params({"n_schedule": [1]})


@pytest.fixture
def staircase(lab):
    """Лестничные прокладки со сдвигом на h_j: h = 1, 9, 147, 4515, 280395."""
    return lab.build_params(
        {"n_schedule": [2, 3, 4, 5], "spacer": {"kind": "staircase", "value": 1, "offset_h": True}}
    )

"""Тесты иерархии исключений лаборатории."""
import pytest

from src.rankone.lab.core import (
    ArityMismatch,
    ConfigurationError,
    DivergentTail,
    IllConditioned,
    IncompatibleFlows,
    IoFailure,
    LabError,
    NegativeSpacer,
    NoStableCluster,
    NonAdmissibleSchedule,
    NotMeanZero,
    ShiftTooLarge,
    StageOverflow,
    UnknownStage,
    UnrefinableStage,
)


class TestLabErrors:
    """Тесты кодов и сообщений исключений."""

    @pytest.mark.parametrize(
        "error_class, code",
        [
            (ConfigurationError, 100),
            (NonAdmissibleSchedule, 110),
            (NegativeSpacer, 111),
            (StageOverflow, 112),
            (UnknownStage, 113),
            (UnrefinableStage, 120),
            (ShiftTooLarge, 121),
            (NotMeanZero, 130),
            (NoStableCluster, 131),
            (ArityMismatch, 140),
            (DivergentTail, 141),
            (IllConditioned, 150),
            (IncompatibleFlows, 160),
            (IoFailure, 170),
        ],
    )
    def test_error_codes(self, error_class, code):
        """Тест кода ошибки и базового класса."""
        error = error_class("сообщение", [{"stage": 2}])
        assert isinstance(error, LabError)
        assert error.code == code
        assert error.message == "сообщение"
        assert error.details == [{"stage": 2}]
        assert str(error) == f"Lab Error {code}: сообщение"

    def test_details_default_to_empty_list(self):
        """Тест пустых подробностей по умолчанию."""
        assert ShiftTooLarge("сдвиг").details == []

    def test_catch_by_base_class(self):
        """Тест перехвата по базовому классу."""
        with pytest.raises(LabError) as exc_info:
            raise IncompatibleFlows("разные схемы")
        assert exc_info.value.code == 160

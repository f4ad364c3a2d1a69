"""Тесты оценок матричных элементов."""
from fractions import Fraction as Q

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.rankone.lab import Laboratory
from src.rankone.lab.core import ShiftTooLarge, UnrefinableStage
from src.rankone.lab.schemas import CorrelationInterval, StepFunction

SQUARE = StepFunction.combination(1, [(0, "1/2", 1), ("1/2", 1, -1)])


class TestCorrelate:
    """Тесты гарантированных оценок <T_t f, g>."""

    def test_identity_is_exact(self, lab, odometer, square):
        """Тест: при t = 0 оценка точна."""
        interval = lab.correlate(odometer, square, square, 0, 3)
        assert interval.is_exact
        assert interval.lo == 1

    @pytest.mark.parametrize(
        "stage, lo, hi",
        [
            (1, -1, 0),
            (2, -1, Q(-2, 3)),
            (3, -1, Q(-8, 9)),
        ],
    )
    def test_half_shift_narrows_with_refinement(self, lab, odometer, square, stage, lo, hi):
        """Тест сужения оценки при измельчении."""
        interval = lab.correlate(odometer, square, square, "1/2", stage)
        assert (interval.lo, interval.hi) == (lo, hi)

    def test_escape_radius(self, lab, odometer, square):
        """Тест точной части и радиуса выхода."""
        result = lab.correlation_result(odometer, square, square, 1, 3)
        assert result.in_column == Q(8, 9)
        assert result.escape_radius == Q(1, 9)
        assert (result.enclosure.lo, result.enclosure.hi) == (Q(7, 9), 1)

    def test_shift_too_large(self, lab, odometer, square):
        """Тест сдвига не меньше высоты колонны."""
        with pytest.raises(ShiftTooLarge) as exc_info:
            lab.correlate(odometer, square, square, 1, 1)
        assert exc_info.value.code == 121

    def test_unrefinable(self, lab, odometer):
        """Тест функции более позднего этапа."""
        late = StepFunction.indicator(2, 0, 1)
        with pytest.raises(UnrefinableStage):
            lab.correlate(odometer, late, late, 0, 1)

    def test_rotation_is_exact(self, lab, rotation, square):
        """Тест точных значений поворота при любых сдвигах."""
        assert lab.correlate(rotation, square, square, "1/2", 1).lo == -1
        assert lab.correlate(rotation, square, square, "7/2", 1).hi == -1
        assert lab.correlate(rotation, square, square, "1/4", 1).is_exact
        assert lab.correlate(rotation, square, square, "1/4", 1).lo == 0

    def test_normalized_in_probability_mode(self, lab, spacer_flow, square):
        """Тест нормировки на mu_J."""
        result = lab.correlation_result(spacer_flow, square, square, 0, 2)
        assert result.enclosure.lo == 1
        assert (result.normalized.lo, result.normalized.hi) == (Q(1, 2), Q(1, 2))

    def test_normalize(self, lab, spacer_flow):
        """Тест нормировки произвольного интервала на mu_J."""
        normalized = lab.normalize(spacer_flow, CorrelationInterval.bounds(-1, 4), 2)
        assert (normalized.lo, normalized.hi) == (Q(-1, 2), 2)

    def test_sigma_finite_is_not_normalized(self, lab, square):
        """Тест отсутствия нормировки для бесконечной меры."""
        params = lab.build_params({"n_schedule": [2], "mode": "sigma_finite"})
        assert lab.correlation_result(params, square, square, 0, 2).normalized is None

    @settings(max_examples=40, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(st.fractions(min_value=Q(-17, 2), max_value=Q(17, 2), max_denominator=8))
    def test_time_reversal_symmetry(self, t):
        """Тест: оценки <T_t f, f> и <T_-t f, f> совпадают."""
        with Laboratory(name="symmetry") as lab:
            params = lab.build_params({"n_schedule": [2, 2]})
            forward = lab.correlate(params, SQUARE, SQUARE, t, 3)
            backward = lab.correlate(params, SQUARE, SQUARE, -t, 3)
        assert (forward.lo, forward.hi) == (backward.lo, backward.hi)


class TestNorms:
    """Тесты норм и дефекта жесткости."""

    def test_norms(self, lab, odometer, square):
        """Тест точных норм."""
        assert lab.norm_sq(odometer, square) == 1
        assert lab.sup_norm(odometer, square.scaled(-3)) == 3

    def test_rigidity_defect(self, lab, odometer, square):
        """Тест дефекта ||T_t f - f||^2 = 2||f||^2 - 2<T_t f, f>."""
        defect = lab.rigidity_defect(odometer, square, 1, 3)
        assert (defect.lo, defect.hi) == (0, Q(4, 9))

    def test_rigidity_defect_is_clamped(self, lab, odometer, square):
        """Тест пересечения с априорным диапазоном [0, 4||f||^2]."""
        defect = lab.rigidity_defect(odometer, square, "1/2", 1)
        assert defect.lo >= 0
        assert defect.hi <= 4

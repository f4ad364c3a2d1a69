"""Тесты интервальной арифметики оценок."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from src.rankone.lab.schemas import CorrelationInterval

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=8)


@st.composite
def intervals(draw):
    a, b = draw(fractions), draw(fractions)
    return CorrelationInterval.bounds(min(a, b), max(a, b))


class TestIntervalConstruction:
    """Тесты конструкторов."""

    def test_validated_order(self):
        """Тест проверки порядка границ при валидации."""
        with pytest.raises(ValidationError, match="нижняя граница интервала больше верхней"):
            CorrelationInterval(lo="1/2", hi="1/3")

    def test_string_bounds_are_parsed(self):
        """Тест разбора строковых границ."""
        interval = CorrelationInterval(lo="-1/2", hi="3/4")
        assert interval.lo == Q(-1, 2)
        assert interval.hi == Q(3, 4)

    def test_bounds_rejects_reversed(self):
        """Тест быстрого конструктора с неверным порядком."""
        with pytest.raises(ValueError):
            CorrelationInterval.bounds(1, 0)

    def test_around_and_exact(self):
        """Тест конструкторов по центру и точному значению."""
        around = CorrelationInterval.around(Q(1, 2), Q(1, 4))
        assert (around.lo, around.hi) == (Q(1, 4), Q(3, 4))
        assert around.mid == Q(1, 2)
        assert around.radius == Q(1, 4)
        assert CorrelationInterval.exact(3).is_exact
        with pytest.raises(ValueError):
            CorrelationInterval.around(0, -1)


class TestIntervalProperties:
    """Тесты величин интервала."""

    @pytest.mark.parametrize(
        "lo, hi, magnitude, mignitude",
        [
            (-2, 1, 2, 0),
            (Q(1, 3), 2, 2, Q(1, 3)),
            (-3, Q(-1, 2), 3, Q(1, 2)),
        ],
    )
    def test_magnitude_and_mignitude(self, lo, hi, magnitude, mignitude):
        """Тест наибольшего и наименьшего модуля."""
        interval = CorrelationInterval.bounds(lo, hi)
        assert interval.magnitude == magnitude
        assert interval.mignitude == mignitude

    def test_containment(self):
        """Тест вложенности и пересечения."""
        outer = CorrelationInterval.bounds(-1, 1)
        inner = CorrelationInterval.bounds(0, Q(1, 2))
        assert outer.contains(0)
        assert not outer.contains(2)
        assert outer.contains_interval(inner)
        assert not inner.contains_interval(outer)
        assert outer.intersect(CorrelationInterval.bounds(2, 3)) is None

    def test_clamp(self):
        """Тест ограничения априорным диапазоном."""
        clamped = CorrelationInterval.bounds(-3, Q(1, 2)).clamp(-1, 1)
        assert (clamped.lo, clamped.hi) == (-1, Q(1, 2))
        with pytest.raises(ValueError):
            CorrelationInterval.bounds(2, 3).clamp(-1, 1)

    def test_power(self):
        """Тест степеней интервала, содержащего ноль."""
        squared = CorrelationInterval.bounds(-2, 1).power(2)
        assert (squared.lo, squared.hi) == (0, 4)
        cubed = CorrelationInterval.bounds(-2, 1).power(3)
        assert (cubed.lo, cubed.hi) == (-8, 1)
        one = CorrelationInterval.bounds(-2, 1).power(0)
        assert (one.lo, one.hi) == (1, 1)
        with pytest.raises(ValueError):
            CorrelationInterval.exact(1).power(-1)


class TestIntervalArithmetic:
    """Тесты включения значений в результат операций."""

    @given(intervals(), intervals(), st.data())
    def test_operations_enclose_values(self, first, second, data):
        """Тест: результат операции содержит результат для любых точек операндов."""
        x = data.draw(st.fractions(min_value=first.lo, max_value=first.hi))
        y = data.draw(st.fractions(min_value=second.lo, max_value=second.hi))

        assert (first + second).contains(x + y)
        assert (first - second).contains(x - y)
        assert (first * second).contains(x * y)
        assert (-first).contains(-x)

    @given(intervals(), fractions)
    def test_scalar_operations(self, interval, factor):
        """Тест операций с числом."""
        scaled = interval.scale(factor)
        assert scaled.contains(interval.lo * factor)
        assert scaled.contains(interval.hi * factor)
        shifted = 1 - interval
        assert (shifted.lo, shifted.hi) == (1 - interval.hi, 1 - interval.lo)

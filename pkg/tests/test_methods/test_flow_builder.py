"""Тесты операций построения потока."""
from fractions import Fraction as Q

import pytest
from pydantic import ValidationError

from src.rankone.lab.core import (
    ConfigurationError,
    NegativeSpacer,
    NonAdmissibleSchedule,
    StageOverflow,
    UnknownStage,
)
from src.rankone.lab.schemas import FlowSpec, LevelRef, PointLocation


class TestBuildParams:
    """Тесты проверки описания потока."""

    def test_defaults_from_config(self, lab):
        """Тест подстановки предельного этапа и бюджета из конфигурации."""
        params = lab.build_params({"n_schedule": [2, 3]})
        assert params.n_schedule == (2, 3)
        assert params.max_stage == lab.config.max_stage
        assert params.bit_budget == lab.config.bit_budget
        assert params.last_stage == 3

    def test_accepts_flow_spec(self, lab):
        """Тест передачи готовой схемы FlowSpec."""
        params = lab.build_params(FlowSpec(n_schedule=[2], h1="1/2", mode="sigma_finite"))
        assert params.h1 == Q(1, 2)
        assert params.measure_mode == "sigma_finite"

    def test_admissibility_table(self, lab, staircase):
        """Тест таблицы условия r_j > h_j^j."""
        rows = lab.admissibility_table(staircase)
        assert len(rows) == 4
        assert (rows[0].j, rows[0].r, rows[0].h, rows[0].bound, rows[0].admissible) == (1, 3, 1, 1, True)
        assert (rows[1].j, rows[1].r, rows[1].h, rows[1].bound, rows[1].admissible) == (2, 7, 9, 81, False)

    def test_strict_admissibility_rejects_schedule(self, lab):
        """Тест отказа в недопустимом расписании."""
        config = {
            "n_schedule": [2, 3, 4, 5],
            "spacer": {"kind": "staircase", "value": 1, "offset_h": True},
            "strict_admissibility": True,
        }
        with pytest.raises(NonAdmissibleSchedule) as exc_info:
            lab.build_params(config)
        assert exc_info.value.code == 110
        assert exc_info.value.details[0]["j"] == 2

    def test_strict_admissibility_accepts_first_stage(self, lab):
        """Тест допустимого расписания из одного перехода."""
        params = lab.build_params({"n_schedule": [2], "strict_admissibility": True})
        assert params.strict_admissibility

    def test_negative_spacer(self, lab):
        """Тест отрицательной прокладки."""
        with pytest.raises(NegativeSpacer):
            lab.build_params({"n_schedule": [1], "spacer": {"kind": "custom", "table": [["-1"]]}})

    def test_custom_table_mismatch(self, lab):
        """Тест таблицы прокладок неверной длины."""
        with pytest.raises(ConfigurationError):
            lab.build_params({"n_schedule": [2], "spacer": {"kind": "custom", "table": [[0]]}})

    def test_bit_budget(self, lab):
        """Тест переполнения бюджета битов при холостом прогоне."""
        with pytest.raises(StageOverflow):
            lab.build_params({"n_schedule": [30, 30, 30], "bit_budget": 64})

    def test_zero_exponent(self, lab):
        """Тест показателя n_j = 0."""
        with pytest.raises(ValidationError):
            lab.build_params({"n_schedule": [2, 0]})


class TestAdvanceStage:
    """Тесты построения этапов."""

    def test_tower_stages(self, lab, spacer_flow):
        """Тест этапов потока с прокладками."""
        first, second = lab.tower_stages(spacer_flow)
        assert (first.h, first.w, first.mu) == (1, 1, 1)
        assert (second.h, second.w, second.mu, second.spacer_mass) == (6, Q(1, 3), 2, 1)

    def test_advance_stage(self, lab, odometer):
        """Тест перехода, согласованного с общей башней."""
        first = lab.tower_stages(odometer, 1)[0]
        second = lab.advance_stage(odometer, first)
        assert second == lab.tower_stages(odometer, 2)[1]
        assert lab.advance_stage(odometer, second).h == 9

    def test_advance_past_last_stage(self, lab, spacer_flow):
        """Тест перехода после последнего этапа."""
        last = lab.tower_stages(spacer_flow)[-1]
        with pytest.raises(UnknownStage):
            lab.advance_stage(spacer_flow, last)

    def test_stage_transition(self, lab, spacer_flow):
        """Тест геометрии перехода."""
        transition = lab.stage_transition(spacer_flow, 1)
        assert transition.offsets == (0, 2, 4)
        assert transition.locate(Q(5, 2)) == ("copy", 2, Q(1, 2))
        assert transition.locate(Q(3)) == ("spacer", 2, 0)

    def test_measure_is_monotone(self, lab, staircase):
        """Тест роста накопленной меры по этапам."""
        stages = lab.tower_stages(staircase)
        assert [s.h for s in stages] == [1, 9, 147, 4515, 280395]
        assert all(a.mu < b.mu for a, b in zip(stages, stages[1:]))


class TestRefineLevel:
    """Тесты измельчения уровней."""

    def test_full_column(self, lab, odometer):
        """Тест измельчения колонны этапа 1 до этапа 3."""
        levels = lab.refine_level(LevelRef(stage=1, lo=0, hi=1), 3, odometer)
        assert len(levels.intervals) == 9
        assert levels.measure == 1

    def test_with_spacers(self, lab, spacer_flow):
        """Тест вхождений уровня в колонну с прокладками."""
        levels = lab.refine_level(LevelRef(stage=1, lo=0, hi="1/2"), 2, spacer_flow)
        assert levels.intervals == ((0, Q(1, 2)), (2, Q(5, 2)), (4, Q(9, 2)))
        assert levels.measure == Q(1, 2)
        assert levels.contains(Q(2))
        assert not levels.contains(Q(3))

    def test_same_stage(self, lab, spacer_flow):
        """Тест измельчения до собственного этапа."""
        levels = lab.refine_level(LevelRef(stage=2, lo=1, hi=3), 2, spacer_flow)
        assert levels.intervals == ((1, 3),)

    def test_coarser_target(self, lab, spacer_flow):
        """Тест целевого этапа раньше этапа уровня."""
        with pytest.raises(UnknownStage):
            lab.refine_level(LevelRef(stage=2, lo=0, hi=1), 1, spacer_flow)

    def test_level_above_column(self, lab, spacer_flow):
        """Тест уровня выше своей колонны."""
        with pytest.raises(UnknownStage):
            lab.refine_level(LevelRef(stage=1, lo=0, hi=2), 2, spacer_flow)


class TestPointTraversal:
    """Тесты обхода точек колонн."""

    def test_ascend(self, lab, spacer_flow):
        """Тест подъема точки: горизонтальная координата выбирает копию."""
        point = lab.locate_point(spacer_flow, PointLocation(stage=1, y="1/2", x="1/2"), 2)
        assert (point.stage, point.y, point.x) == (2, Q(5, 2), Q(1, 6))

    def test_descend(self, lab, spacer_flow):
        """Тест спуска точки копии."""
        point = lab.locate_point(spacer_flow, PointLocation(stage=2, y="5/2", x=0), 1)
        assert (point.stage, point.y, point.x) == (1, Q(1, 2), Q(1, 3))

    def test_descend_into_spacer(self, lab, spacer_flow):
        """Тест спуска точки прокладки."""
        assert lab.locate_point(spacer_flow, PointLocation(stage=2, y=3, x=0), 1) is None

    def test_point_outside_column(self, lab, spacer_flow):
        """Тест точки вне своей колонны."""
        with pytest.raises(UnknownStage):
            lab.locate_point(spacer_flow, PointLocation(stage=1, y=2, x=0), 2)

    def test_flow_point_rises(self, lab, spacer_flow):
        """Тест переноса точки через верх колонны этапа 1."""
        result = lab.flow_point(spacer_flow, PointLocation(stage=1, y="1/2", x=0), 1)
        assert not result.escaped
        assert (result.point.stage, result.point.y) == (2, Q(3, 2))

    def test_flow_point_escapes(self, lab, spacer_flow):
        """Тест выхода образа за последнюю построенную колонну."""
        result = lab.flow_point(spacer_flow, PointLocation(stage=2, y=5, x=0), 2)
        assert result.escaped
        assert result.point is None

    def test_rotation(self, lab, rotation):
        """Тест поворота для вырожденного потока."""
        result = lab.flow_point(rotation, PointLocation(stage=1, y="1/2"), Q(7, 4))
        assert result.point.y == Q(1, 4)

"""Оракулы гарантированных оценок.

Оценки этапа J сравниваются с оценками более глубокого этапа и со случайными
точками колонн, перенесенными потоком через обход этапов. Генератор берет
зерно oracle_seed из LabConfig.
"""
import math
from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.rankone.lab.schemas import ElementaryTensor, FlowPair, LevelRef, PointLocation, StepFunction
from src.rankone.lab.schemas.tensor_lab.tensors import TensorFactor

GRID = 2 ** 16
SCHEDULE = [2, 2, 2, 2]
RULES = [
    {"kind": "constant", "value": 1},
    {"kind": "staircase", "value": 1},
    {"kind": "constant", "value": 0, "offset_h": True},
    {"kind": "staircase", "value": "1/2", "offset_h": True},
]


def step_functions():
    """Функции этапа 1 с уровнями на сетке 1/8 и ненулевыми коэффициентами."""
    part = st.integers(0, 7).flatmap(
        lambda a: st.tuples(st.just(a), st.integers(a + 1, 8), st.sampled_from([-2, -1, 1, 2]))
    )
    return st.lists(part, min_size=1, max_size=3).map(
        lambda parts: StepFunction.combination(1, [(Q(a, 8), Q(b, 8), c) for a, b, c in parts])
    )


@st.composite
def refinement_cases(draw):
    rule = draw(st.sampled_from(RULES))
    stage = draw(st.integers(1, 3))
    fraction = draw(st.fractions(min_value=Q(-15, 16), max_value=Q(15, 16), max_denominator=16))
    return rule, stage, fraction, draw(step_functions()), draw(step_functions())


def random_points(lab, params, stage, rng, count):
    """Равномерные точки колонны этапа с рациональными координатами на сетке GRID."""
    column = lab.tower_stages(params)[stage - 1]
    ys = rng.integers(0, GRID, size=count)
    xs = rng.integers(0, GRID, size=count)
    return [
        PointLocation(stage=stage, y=column.h * Q(int(y), GRID), x=column.w * Q(int(x), GRID))
        for y, x in zip(ys, xs)
    ]


def value_at(lab, params, f, point) -> Q:
    """Значение функции этапа 1 в точке любой колонны, на прокладках ноль."""
    base = lab.locate_point(params, point, 1)
    if base is None:
        return Q(0)
    return sum((term.coef for term in f.terms if term.level.lo <= base.y < term.level.hi), Q(0))


def address(lab, params, point):
    """Адрес точки, общий для потоков одной схемы разрезания.

    ("c", y, x) - точка начальной колонны, ("s", j, i, local, x) - точка
    прокладки i перехода j на локальной высоте local.
    """
    widths = [stage.w for stage in lab.tower_stages(params)]
    y, x, stage = point.y, point.x, point.stage
    while stage > 1:
        kind, index, local = lab.stage_transition(params, stage - 1).locate(y)
        if kind == "spacer":
            return ("s", stage - 1, index, local, x)
        x += (index - 1) * widths[stage - 1]
        y = local
        stage -= 1
    return ("c", y, x)


def restore(lab, params, key):
    """Точка потока params с данным адресом или None, если прокладка ниже."""
    if key[0] == "c":
        return PointLocation(stage=1, y=key[1], x=key[2])
    _, j, index, local, x = key
    transition = lab.stage_transition(params, j)
    if local >= transition.spacers[index - 1]:
        return None
    return PointLocation(stage=j + 1, y=transition.offsets[index - 1] + transition.h + local, x=x)


def lands_in_image(lab, pair, level, point, s):
    """Лежит ли R_s a в T_s A: 1, 0 или None, если построенных этапов не хватило."""
    image = lab.flow_point(pair.first, point, s)
    if image.escaped:
        return None
    target = restore(lab, pair.second, address(lab, pair.first, image.point))
    if target is None:
        return 0
    back = lab.flow_point(pair.second, target, -s)
    if back.escaped:
        return None
    key = address(lab, pair.second, back.point)
    return int(key[0] == "c" and level.lo <= key[1] < level.hi)


class TestRefinementOracle:
    """Оценка более глубокого этапа лежит внутри оценки этапа J."""

    @settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(refinement_cases())
    def test_deeper_stage_inside_coarse_random(self, lab, case):
        """Тест: интервал этапа J + 2 вложен в интервал этапа J."""
        rule, stage, fraction, f, g = case
        params = lab.build_params({"n_schedule": SCHEDULE, "spacer": rule})
        t = fraction * lab.tower_stages(params)[stage - 1].h

        coarse = lab.correlate(params, f, g, t, stage)
        deep = lab.correlate(params, f, g, t, stage + 2)
        assert coarse.lo <= deep.lo
        assert deep.hi <= coarse.hi


class TestMonteCarloOracles:
    """Сравнение точных величин со случайными точками колонн."""

    @pytest.fixture
    def rng(self, lab):
        return lab.oracle_rng()

    def test_monte_carlo_norm_sq(self, lab, rng):
        """Тест: ||f||^2 совпадает со средним f^2 по колонне этапа 3 в пределах 5 сигм."""
        params = lab.build_params({"n_schedule": [2, 2, 2], "spacer": {"kind": "staircase", "value": 1}})
        f = StepFunction.combination(1, [(0, "1/4", 2), ("1/4", "3/4", -1), ("1/2", 1, 3)])
        column = lab.tower_stages(params)[2]
        mass = float(column.h * column.w)
        count = 4000

        samples = np.array([float(value_at(lab, params, f, p)) ** 2 for p in random_points(lab, params, 3, rng, count)])
        estimate = mass * samples.mean()
        sigma = mass * samples.std() / math.sqrt(count)

        assert lab.norm_sq(params, f) == Q(9, 2)
        assert abs(estimate - 4.5) <= 5 * sigma

    def test_random_points_refine_level(self, lab, rng):
        """Тест: точка этапа 4 лежит в измельченном уровне тогда и только тогда, когда ее спуск лежит в уровне."""
        params = lab.build_params(
            {"n_schedule": [2, 3, 2], "spacer": {"kind": "staircase", "value": "1/2", "offset_h": True}}
        )
        level = LevelRef(stage=2, lo=Q(1, 3), hi=4)
        occurrences = lab.refine_level(level, 4, params)

        hits = 0
        points = random_points(lab, params, 4, rng, 2000)
        for point in points:
            base = lab.locate_point(params, point, 2)
            inside = base is not None and level.lo <= base.y < level.hi
            assert occurrences.contains(point.y) == inside
            hits += inside
        assert 0 < hits < len(points)

    def test_monte_carlo_tensor_correlation(self, lab, rng):
        """Тест: среднее по случайным парам точек попадает в оценку <(T_s ⊗ T_t) F, G>."""
        params = lab.build_params({"n_schedule": [2, 2, 2], "spacer": {"kind": "constant", "value": 1}})
        f1 = StepFunction.combination(1, [(0, "1/2", 1), ("1/2", 1, -1)])
        g1 = StepFunction.indicator(1, 0, "3/4")
        f2 = StepFunction.indicator(1, "1/4", 1)
        g2 = StepFunction.indicator(1, 0, "1/2", 2)
        F = ElementaryTensor(factors=(TensorFactor(function=f1), TensorFactor(function=f2)))
        G = ElementaryTensor(factors=(TensorFactor(function=g1), TensorFactor(function=g2)))
        shifts = (Q(1, 2), Q(7, 3))
        stage, count, bound = 2, 3000, 2.0

        enclosure = lab.tensor_correlate(params, shifts, F, G, stage)

        column = lab.tower_stages(params)[stage - 1]
        mass = float(column.h * column.w)
        first = random_points(lab, params, stage, rng, count)
        second = random_points(lab, params, stage, rng, count)
        products, unknown = [], 0
        for p1, p2 in zip(first, second):
            images = [lab.flow_point(params, p1, shifts[0]), lab.flow_point(params, p2, shifts[1])]
            if any(image.escaped for image in images):
                unknown += 1
                products.append(0.0)
                continue
            products.append(
                float(value_at(lab, params, f1, images[0].point) * value_at(lab, params, g1, p1))
                * float(value_at(lab, params, f2, images[1].point) * value_at(lab, params, g2, p2))
            )

        samples = np.array(products)
        estimate = mass ** 2 * samples.mean()
        tolerance = 5 * mass ** 2 * samples.std() / math.sqrt(count) + mass ** 2 * bound * unknown / count
        assert float(enclosure.lo) - tolerance <= estimate <= float(enclosure.hi) + tolerance

    def test_monte_carlo_rho(self, lab, rng):
        """Тест: rho по случайным точкам базиса попадает в оценку без хвоста ряда."""
        pair = FlowPair(
            first=lab.build_params({"n_schedule": [2, 2, 2], "spacer": {"kind": "constant", "value": 1}}),
            second=lab.build_params({"n_schedule": [2, 2, 2], "spacer": {"kind": "staircase", "value": 1}}),
        )
        basis = lab.default_metric_basis(pair.first, 2)
        s, count = Q(1, 2), 1500

        enclosure = lab.rho(pair, s, basis, 4)

        lower = upper = spread = 0.0
        for i, level in enumerate(basis.sets, start=1):
            scale = 2 * float(level.length * pair.first.w1) / 2 ** i
            for direction in (s, -s):
                starts = [
                    PointLocation(stage=1, y=level.lo + level.length * Q(int(y), GRID), x=pair.first.w1 * Q(int(x), GRID))
                    for y, x in zip(rng.integers(0, GRID, size=count), rng.integers(0, GRID, size=count))
                ]
                outcomes = [lands_in_image(lab, pair, level, point, direction) for point in starts]
                matched = sum(1 for outcome in outcomes if outcome == 1)
                unknown = sum(1 for outcome in outcomes if outcome is None)
                lower += scale * (1 - (matched + unknown) / count)
                upper += scale * (1 - matched / count)
                spread += (scale * 0.5 / math.sqrt(count)) ** 2

        tolerance = 5 * math.sqrt(spread)
        assert float(enclosure.lo) <= upper + tolerance
        assert lower - tolerance <= float(enclosure.hi - basis.tail_bound)

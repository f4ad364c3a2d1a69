from collections import defaultdict
from fractions import Fraction

from ...core import ConfigurationError, IncompatibleFlows, LabManager, ShiftTooLarge
from ...core.geometry import CellKey
from ...core.rationals import parse_rational
from ...schemas.correlator import CorrelationInterval
from ...schemas.flow_builder import FlowParams, LevelRef
from ...schemas.metric import FlowPair, MetricBasis

Pieces = dict[CellKey, list[tuple[Fraction, Fraction]]]


def cell_overlap(first: Pieces, second: Pieces) -> Fraction:
    """Суммарная длина пересечения частей с одинаковыми адресами."""
    total = Fraction(0)
    for key, parts in first.items():
        other = second.get(key)
        if not other:
            continue
        for a, b in parts:
            for c, d in other:
                lo, hi = max(a, c), min(b, d)
                if lo < hi:
                    total += hi - lo
    return total


class RhoMixin(LabManager):
    """Реализует операцию rho"""

    def rho(
        self: "RhoMixin",
        pair: FlowPair,
        s: Fraction | int | str,
        basis: MetricBasis,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка rho(R_s, T_s) = sum_i (mu(R_s A_i Δ T_s A_i) + mu(R_{-s} A_i Δ T_{-s} A_i)) / 2^i.

        Notes:
            • Точки двух потоков отождествляются по адресу ячейки и локальной высоте.
            • mu(R A Δ T A) = 2 mu(A) - 2 mu(R A ∩ T A); пересечение внутри колонн
              считается точно, вышедшая из колонн масса расширяет интервал.
            • Граница отброшенного хвоста базиса добавляется к верхней оценке;
              при s = 0 все слагаемые равны нулю и результат точный.

        Raises:
            IncompatibleFlows: Потоки различаются схемой разрезания
            ShiftTooLarge: s не меньше высоты колонны этапа J
        """
        s = parse_rational(s)
        if not 0 <= s <= 1:
            raise ConfigurationError(f"s = {s} вне отрезка [0, 1]", [{"s": str(s)}])
        self._check_pair(pair, stage)
        if s == 0:
            return CorrelationInterval.exact(0)

        total = CorrelationInterval.exact(0)
        for i, level in enumerate(basis.sets, start=1):
            weight = Fraction(1, 2 ** i)
            forward = self._symmetric_difference(pair, level, s, stage)
            backward = self._symmetric_difference(pair, level, -s, stage)
            total = total + (forward + backward).scale(weight)

        return CorrelationInterval.bounds(total.lo, total.hi + basis.tail_bound)

    def _check_pair(self: "RhoMixin", pair: FlowPair, stage: int) -> None:
        if not pair.first.compatible_with(pair.second):
            raise IncompatibleFlows(
                "Потоки различаются схемой разрезания (n_schedule, h1, w1)",
                [{"first": list(pair.first.n_schedule), "second": list(pair.second.n_schedule)}],
            )
        self._tower(pair.first).ensure(stage)
        self._tower(pair.second).ensure(stage)

    def _symmetric_difference(
        self: "RhoMixin",
        pair: FlowPair,
        level: LevelRef,
        t: Fraction,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка mu(R_t A Δ T_t A)."""
        width = self._tower(pair.first).stage(stage).w
        measure = level.length * self._tower(pair.first).stage(level.stage).w

        first, first_escaped = self._shifted_cells(pair.first, level, t, stage)
        second, second_escaped = self._shifted_cells(pair.second, level, t, stage)

        known = width * cell_overlap(first, second)
        possible = min(measure, known + width * (first_escaped + second_escaped))
        return CorrelationInterval.bounds(2 * measure - 2 * possible, 2 * measure - 2 * known)

    def _shifted_cells(
        self: "RhoMixin",
        params: FlowParams,
        level: LevelRef,
        t: Fraction,
        stage: int,
    ) -> tuple[Pieces, Fraction]:
        """Части T_t A по адресам ячеек этапа J и длина ушедшей из колонны части."""
        tower = self._tower(params)
        layout = tower.cells(stage)
        height = layout.height
        if not params.is_periodic and abs(t) >= height:
            raise ShiftTooLarge(
                f"|s| = {abs(t)} не меньше высоты колонны этапа {stage} ({height})",
                [{"s": str(t), "stage": stage, "height": str(height)}],
            )

        pieces: Pieces = defaultdict(list)
        escaped = Fraction(0)
        for a, b in self.refine_level(level, stage, params).intervals:
            lo, hi = a + t, b + t
            if params.is_periodic:
                shift = height * (lo // height)
                lo, hi = lo - shift, hi - shift
                spans = [(lo, min(hi, height)), (Fraction(0), hi - height)]
            else:
                escaped += (hi - lo) - max(Fraction(0), min(hi, height) - max(lo, Fraction(0)))
                spans = [(lo, hi)]
            for u, v in spans:
                for key, c, d in layout.split(u, v):
                    pieces[key].append((c, d))
        return pieces, escaped

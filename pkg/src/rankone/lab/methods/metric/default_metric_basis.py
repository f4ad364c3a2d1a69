from fractions import Fraction

from ...core import LabManager
from ...schemas.flow_builder import FlowParams, LevelRef
from ...schemas.metric import MetricBasis


class DefaultMetricBasisMixin(LabManager):
    """Реализует построение базиса по умолчанию"""

    def default_metric_basis(
        self: "DefaultMetricBasisMixin",
        params: FlowParams,
        count: int,
    ) -> MetricBasis:
        """Первые count двоичных подуровней начальной колонны.

        Notes:
            Порядок: [0, h1), затем половины, четверти и так далее снизу вверх.
            Каждое множество имеет меру не больше h1 * w1, поэтому отброшенный
            хвост ряда не превосходит 4 * h1 * w1 / 2^count.

        Example:
            basis = lab.default_metric_basis(params, 7)  # уровни глубины 0, 1, 2
        """
        if count < 1:
            raise ValueError("базис должен содержать хотя бы одно множество")

        sets = []
        depth = 0
        while len(sets) < count:
            pieces = 2 ** depth
            step = params.h1 / pieces
            for k in range(pieces):
                if len(sets) == count:
                    break
                sets.append(LevelRef(stage=1, lo=k * step, hi=(k + 1) * step))
            depth += 1

        tail = 4 * params.h1 * params.w1 / Fraction(2) ** count
        return MetricBasis(sets=tuple(sets), tail_bound=tail)

from fractions import Fraction
from math import factorial
from typing import Sequence

from ...core import ArityMismatch, LabManager
from ...core.permanents import ryser_permanent
from ...schemas.correlator import CorrelationInterval, StepFunction
from ...schemas.flow_builder import FlowParams


class SymPowerCorrelateMixin(LabManager):
    """Реализует операцию sym_power_correlate"""

    def sym_power_correlate(
        self: "SymPowerCorrelateMixin",
        n: int,
        cross_gram: Sequence[Sequence[CorrelationInterval]],
    ) -> CorrelationInterval:
        """Оценка <T^{⊙n}(f_1 ⊙ ... ⊙ f_n), g_1 ⊙ ... ⊙ g_n> = perm(M) / n!.

        Notes:
            • M[i][k] - оценка <T_t f_i, g_k>.
            • Перманент середин считается точно, радиус оценивается как
              perm(|mid| + rad) - perm(|mid|).
            • n = 0 дает вакуумную компоненту 1.

        Raises:
            ArityMismatch: Матрица не n x n

        Example:
            value = lab.sym_power_correlate(2, [[a, b], [c, d]])  # (ad + bc) / 2
        """
        if n < 0:
            raise ValueError("степень симметрического произведения отрицательна")
        if len(cross_gram) != n or any(len(row) != n for row in cross_gram):
            raise ArityMismatch(
                f"Матрица корреляций должна быть {n} x {n}",
                [{"n": n, "rows": len(cross_gram), "columns": [len(row) for row in cross_gram]}],
            )

        mids = [[entry.mid for entry in row] for row in cross_gram]
        magnitudes = [[abs(entry.mid) for entry in row] for row in cross_gram]
        widened = [[abs(entry.mid) + entry.radius for entry in row] for row in cross_gram]

        scale = Fraction(1, factorial(n))
        center = ryser_permanent(mids) * scale
        radius = (ryser_permanent(widened) - ryser_permanent(magnitudes)) * scale
        return CorrelationInterval.around(center, radius)

    def sym_power_gram(
        self: "SymPowerCorrelateMixin",
        params: FlowParams,
        fs: Sequence[StepFunction],
        gs: Sequence[StepFunction],
        t: Fraction | int | str,
        stage: int,
    ) -> list[list[CorrelationInterval]]:
        """Матрица оценок <T_t f_i, g_k> для sym_power_correlate."""
        if len(fs) != len(gs):
            raise ArityMismatch(
                f"Число функций f ({len(fs)}) и g ({len(gs)}) различается",
                [{"f": len(fs), "g": len(gs)}],
            )
        return [[self.correlate(params, f, g, t, stage) for g in gs] for f in fs]

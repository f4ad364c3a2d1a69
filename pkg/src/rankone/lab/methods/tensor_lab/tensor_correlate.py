from fractions import Fraction
from typing import Sequence

from ...core import ArityMismatch, LabManager
from ...core.rationals import parse_rational
from ...schemas.correlator import CorrelationInterval
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import ElementaryTensor


class TensorCorrelateMixin(LabManager):
    """Реализует операцию tensor_correlate"""

    def tensor_correlate(
        self: "TensorCorrelateMixin",
        params: FlowParams,
        shifts: Sequence[Fraction | int | str],
        F: ElementaryTensor,
        G: ElementaryTensor,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка <(⊗_k T_{s_k}) F, G> как произведение скалярных оценок.

        Notes:
            Сомножитель k равен <T_{s_k + t_k - sigma_k} f_k, g_k>, где t_k, sigma_k -
            собственные сдвиги сомножителей F и G.

        Raises:
            ArityMismatch: Арности F, G и число сдвигов различаются
            ShiftTooLarge: Суммарный сдвиг сомножителя не помещается в колонну
        """
        if not (len(shifts) == F.arity == G.arity):
            raise ArityMismatch(
                f"Арности не совпадают: сдвигов {len(shifts)}, F {F.arity}, G {G.arity}",
                [{"shifts": len(shifts), "F": F.arity, "G": G.arity}],
            )

        result = CorrelationInterval.exact(1)
        for shift, left, right in zip(shifts, F.factors, G.factors):
            factor = self.correlate(
                params,
                left.function,
                right.function,
                parse_rational(shift) + left.shift - right.shift,
                stage,
            )
            result = result * factor
        return result

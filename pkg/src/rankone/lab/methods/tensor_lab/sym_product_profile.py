from fractions import Fraction
from typing import Iterable, Sequence

from .detect_relations import validate_alphas
from ...core import ArityMismatch, LabManager
from ...schemas.correlator import CorrelationInterval, StepFunction
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import SymPowerSpec, SymProfileRow


class SymProductProfileMixin(LabManager):
    """Реализует операцию sym_product_profile"""

    def sym_product_profile(
        self: "SymProductProfileMixin",
        params: FlowParams,
        spec: SymPowerSpec,
        alphas: Sequence[Fraction | int | str],
        f: StepFunction,
        powers: Iterable[int],
        stage: int,
    ) -> list[SymProfileRow]:
        """Корреляции T^{⊙m_1}_{alpha_1} ⊗ ... ⊗ T^{⊙m_k}_{alpha_k} на степенях p.

        Notes:
            Для вектора f^{⊙m_1} ⊗ ... ⊗ f^{⊙m_k} значение на степени p равно
            prod_k <T_{p alpha_k} f, f>^{m_k}. Строки служат диагностикой
            затухания перекрестных корреляций, о дизъюнктности они не говорят.

        Raises:
            ArityMismatch: Длины alphas и spec.multi_index различаются
        """
        alphas = validate_alphas(alphas)
        if len(alphas) != len(spec.multi_index):
            raise ArityMismatch(
                f"alphas ({len(alphas)}) и multi_index ({len(spec.multi_index)}) разной длины",
                [{"alphas": len(alphas), "multi_index": len(spec.multi_index)}],
            )

        rows = []
        for p in powers:
            value = CorrelationInterval.exact(1)
            for alpha, m in zip(alphas, spec.multi_index):
                if m == 0:
                    continue
                value = value * self.correlate(params, f, f, p * alpha, stage).power(m)
            rows.append(SymProfileRow(power=p, enclosure=value))
        return rows

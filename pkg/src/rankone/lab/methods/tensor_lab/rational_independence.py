from fractions import Fraction
from itertools import product
from typing import Sequence

from .detect_relations import validate_alphas
from ...core import LabManager
from ...schemas.tensor_lab import IndependenceReport


class RationalIndependenceMixin(LabManager):
    """Реализует операцию rational_independence"""

    def rational_independence(
        self: "RationalIndependenceMixin",
        alphas: Sequence[Fraction | int | str],
        coeff_bound: int,
    ) -> IndependenceReport:
        """Ищет ненулевой целый вектор z, |z_i| <= coeff_bound, с sum z_i * alpha_i = 0.

        Notes:
            • Векторы перебираются по возрастанию max|z_i|, внутри нормы -
              лексикографически; учитываются только векторы с положительной
              первой ненулевой координатой.
            • Для рациональных входов соотношение всегда существует при
              достаточно большой границе, сертификат означает только отсутствие
              соотношений с коэффициентами не больше coeff_bound.

        Example:
            report = lab.rational_independence([1, "3/2"], 3)
            assert report.counterexample == (3, -2)
        """
        if coeff_bound < 1:
            raise ValueError("coeff_bound должен быть не меньше 1")
        alphas = validate_alphas(alphas)

        for norm in range(1, coeff_bound + 1):
            for z in product(range(-norm, norm + 1), repeat=len(alphas)):
                if max(abs(x) for x in z) != norm:
                    continue
                if next(x for x in z if x) < 0:
                    continue
                if sum((x * a for x, a in zip(z, alphas)), Fraction(0)) == 0:
                    self.logger.debug(f"Найдено соотношение {z} для alphas={[str(a) for a in alphas]}")
                    return IndependenceReport(bound=coeff_bound, counterexample=z)

        return IndependenceReport(bound=coeff_bound, counterexample=None)

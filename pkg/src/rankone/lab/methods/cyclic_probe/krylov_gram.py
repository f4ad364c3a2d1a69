from ...core import ArityMismatch, LabManager
from ...schemas.cyclic_probe import GramMatrix, ProductOperatorSpec
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import ElementaryTensor


class KrylovGramMixin(LabManager):
    """Реализует операцию krylov_gram"""

    def krylov_gram(
        self: "KrylovGramMixin",
        params: FlowParams,
        spec: ProductOperatorSpec,
        F: ElementaryTensor,
        K: int,
    ) -> GramMatrix:
        """Матрица Грама степеней U^k F, |k| <= K.

        Notes:
            Считаются только 2K + 1 значений <U^d F, F>, d = 0..2K;
            G_{kl} = <U^{|l-k|} F, F> по групповому свойству.

        Raises:
            ArityMismatch: Арность F отличается от числа alphas
            ShiftTooLarge: 2K * alpha_n не помещается в колонну этапа J

        Example:
            gram = lab.krylov_gram(params, ProductOperatorSpec(alphas=(1, 2), stage=5), F, 10)
        """
        if K < 0:
            raise ValueError("K должно быть неотрицательным")
        if F.arity != spec.arity:
            raise ArityMismatch(
                f"Арность F {F.arity} не совпадает с числом сомножителей {spec.arity}",
                [{"F": F.arity, "alphas": spec.arity}],
            )

        band = tuple(
            self.tensor_correlate(params, spec.shifts(d), F, F, spec.stage)
            for d in range(2 * K + 1)
        )
        gram = GramMatrix(K=K, band=band)
        self.logger.debug(f"Матрица Грама {gram.size}x{gram.size}, наибольший радиус {gram.max_radius}")
        return gram

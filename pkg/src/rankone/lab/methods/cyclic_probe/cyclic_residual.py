import numpy as np
import scipy.linalg

from ...core import ArityMismatch, IllConditioned, LabManager
from ...schemas.cyclic_probe import ProductOperatorSpec, ResidualReport
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import ElementaryTensor


class CyclicResidualMixin(LabManager):
    """Реализует операцию cyclic_residual"""

    def cyclic_residual(
        self: "CyclicResidualMixin",
        params: FlowParams,
        spec: ProductOperatorSpec,
        F: ElementaryTensor,
        target: ElementaryTensor,
        K: int,
    ) -> ResidualReport:
        """Квадрат расстояния от target до span{U^k F : |k| <= K}.

        Notes:
            • c* = G^+ b, где b_k = <U^k F, target>, псевдообратная матрица
              строится по собственному разложению середин с отсечением
              собственных значений ниже solver_rcond * lambda_max.
            • Ширина интервалов не проходит через решатель: она учитывается
              как добавка r_t + 2|c|_1 * r_b + |c|_1^2 * r_G.

        Raises:
            ArityMismatch: Арности F, target и оператора различаются
            IllConditioned: После отсечения не осталось ни одного направления
        """
        if target.arity != spec.arity:
            raise ArityMismatch(
                f"Арность цели {target.arity} не совпадает с числом сомножителей {spec.arity}",
                [{"target": target.arity, "alphas": spec.arity}],
            )

        gram = self.krylov_gram(params, spec, F, K)
        cross = [
            self.tensor_correlate(params, spec.shifts(k), F, target, spec.stage)
            for k in range(-K, K + 1)
        ]
        norm = self.tensor_correlate(params, spec.shifts(0), target, target, spec.stage)

        matrix = gram.midpoints()
        b = np.array([float(entry.mid) for entry in cross])
        values, vectors = scipy.linalg.eigh(matrix)
        top = values.max()
        keep = values > self._config.solver_rcond * top if top > 0 else np.zeros_like(values, dtype=bool)
        rank = int(keep.sum())
        if rank == 0:
            raise IllConditioned(
                f"Матрица Грама K={K} вырождена: наибольшее собственное значение {top:.3e}",
                [{"K": K, "lambda_max": float(top)}],
            )

        basis = vectors[:, keep]
        c = basis @ ((basis.T @ b) / values[keep])
        residual = float(norm.mid) - 2 * float(c @ b) + float(c @ matrix @ c)

        total = float(np.abs(c).sum())
        slack = (
            float(norm.radius)
            + 2 * total * float(max(entry.radius for entry in cross))
            + total * total * float(gram.max_radius)
        )

        cut = gram.size - rank
        if cut:
            self.logger.warning(f"Отсечено {cut} из {gram.size} собственных значений матрицы Грама K={K}")

        return ResidualReport(
            K=K,
            target_norm_sq=norm,
            residual_sq=residual,
            slack=slack,
            rank=rank,
            cut=cut,
            coefficients=tuple(float(x) for x in c),
        )

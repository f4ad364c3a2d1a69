import scipy.linalg

from ...core import LabManager
from ...schemas.cyclic_probe import GramMatrix


class CyclicDimensionEstimateMixin(LabManager):
    """Реализует операцию cyclic_dimension_estimate и проверку неотрицательности"""

    def cyclic_dimension_estimate(
        self: "CyclicDimensionEstimateMixin",
        gram: GramMatrix,
        tol_rank: float = 1e-8,
    ) -> int:
        """Число собственных значений середин выше tol_rank * lambda_max."""
        values = scipy.linalg.eigvalsh(gram.midpoints())
        top = values.max()
        if top <= 0:
            return 0
        return int((values > tol_rank * top).sum())

    def check_gram_psd(
        self: "CyclicDimensionEstimateMixin",
        gram: GramMatrix,
        tol_psd: float = 1e-9,
    ) -> bool:
        """lambda_min(середины) >= -(tol_psd + psd_slack)."""
        floor = float(scipy.linalg.eigvalsh(gram.midpoints()).min())
        holds = floor >= -(tol_psd + float(gram.psd_slack))
        if not holds:
            self.logger.warning(f"Матрица Грама K={gram.K} не неотрицательна: lambda_min={floor:.3e}")
        return holds

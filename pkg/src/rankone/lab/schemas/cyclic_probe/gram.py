from fractions import Fraction

import numpy as np
from pydantic import Field, model_validator
from scipy.linalg import toeplitz

from ..entities.base import LabModel
from ..entities.intervals import CorrelationInterval
from ...core.rationals import Rational


class GramMatrix(LabModel):
    """Матрица Грама G_{kl} = <U^k F, U^l F>, k, l in [-K, K].

    Attributes:
        K: Наибольшая степень
        band: Оценки <U^d F, F> для d = 0..2K

    Notes:
        U унитарен, поэтому G_{kl} зависит только от |l - k| и хранится
        одной полосой; матрица середин теплицева и симметрична.
    """
    K: int = Field(..., ge=0, description="Наибольшая степень.")
    band: tuple[CorrelationInterval, ...] = Field(..., description="Полоса <U^d F, F>.")

    @model_validator(mode="after")
    def validate_band(self):
        if len(self.band) != 2 * self.K + 1:
            raise ValueError(f"полоса должна содержать {2 * self.K + 1} элементов")
        return self

    @property
    def size(self) -> int:
        return 2 * self.K + 1

    def entry(self, k: int, l: int) -> CorrelationInterval:
        """G_{kl} для k, l in [-K, K]."""
        if max(abs(k), abs(l)) > self.K:
            raise IndexError(f"степени {k}, {l} вне диапазона [-{self.K}, {self.K}]")
        return self.band[abs(l - k)]

    def midpoints(self) -> np.ndarray:
        return toeplitz([float(entry.mid) for entry in self.band])

    @property
    def max_radius(self) -> Fraction:
        return max(entry.radius for entry in self.band)

    @property
    def psd_slack(self) -> Fraction:
        """Граница спектральной нормы отклонения истинной матрицы от середин."""
        return self.size * self.max_radius


class ResidualReport(LabModel):
    """Расстояние от цели до span{U^k F : |k| <= K}.

    Attributes:
        K: Наибольшая степень
        target_norm_sq: Оценка ||target||^2
        residual_sq: ||target||^2 - 2 c*.b + c*.G c* по серединам
        slack: Вклад ширины интервалов в residual_sq
        rank: Ранг после отсечения
        cut: Число отброшенных собственных значений
        coefficients: Оптимальные коэффициенты c*_k, k = -K..K
    """
    K: int = Field(..., ge=0, description="Наибольшая степень.")
    target_norm_sq: CorrelationInterval = Field(..., description="Оценка ||target||^2.")
    residual_sq: float = Field(..., description="Квадрат невязки по серединам.")
    slack: float = Field(..., ge=0, description="Запас на ширину интервалов.")
    rank: int = Field(..., ge=1, description="Ранг после отсечения.")
    cut: int = Field(..., ge=0, description="Число отброшенных собственных значений.")
    coefficients: tuple[float, ...] = Field(..., description="Оптимальные коэффициенты.")

    @property
    def relative(self) -> float:
        """residual_sq / ||target||^2 (0 для нулевой цели)."""
        norm = float(self.target_norm_sq.mid)
        return self.residual_sq / norm if norm else 0.0

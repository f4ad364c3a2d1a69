"""Тесты проверок циклического вектора."""
import pytest

from src.rankone.lab.core import ArityMismatch, IllConditioned
from src.rankone.lab.schemas import (
    CorrelationInterval,
    ElementaryTensor,
    GramMatrix,
    ProductOperatorSpec,
    StepFunction,
)

SPEC = ProductOperatorSpec(alphas=("1/2",), stage=2)


def exact_band(*values):
    return tuple(CorrelationInterval.exact(v) for v in values)


class TestKrylovGram:
    """Тесты матрицы Грама степеней U."""

    def test_rotation_band(self, lab, rotation, square):
        """Тест полосы <U^d F, F> = (-1)^d для полуоборота."""
        gram = lab.krylov_gram(rotation, SPEC, ElementaryTensor.power(square, 1), 2)
        assert gram.size == 5
        assert [entry.lo for entry in gram.band] == [1, -1, 1, -1, 1]
        assert gram.entry(-2, 1).lo == -1
        assert gram.max_radius == 0
        with pytest.raises(IndexError):
            gram.entry(3, 0)

    def test_dimension_and_psd(self, lab, rotation, square):
        """Тест ранга и неотрицательности."""
        gram = lab.krylov_gram(rotation, SPEC, ElementaryTensor.power(square, 1), 2)
        assert lab.cyclic_dimension_estimate(gram) == 1
        assert lab.check_gram_psd(gram)

    def test_arity(self, lab, rotation, square):
        """Тест арности F."""
        with pytest.raises(ArityMismatch):
            lab.krylov_gram(rotation, SPEC, ElementaryTensor.power(square, 2), 1)

    def test_band_length(self):
        """Тест длины полосы."""
        with pytest.raises(ValueError):
            GramMatrix(K=1, band=exact_band(1, 0))

    def test_hand_made_matrices(self, lab):
        """Тест диагональной и незнакоопределенной матриц."""
        identity = GramMatrix(K=2, band=exact_band(1, 0, 0, 0, 0))
        assert lab.cyclic_dimension_estimate(identity) == 5
        assert lab.check_gram_psd(identity)
        indefinite = GramMatrix(K=1, band=exact_band(0, 1, 0))
        assert not lab.check_gram_psd(indefinite)


class TestCyclicResidual:
    """Тесты невязки проекции на span{U^k F}."""

    def test_orthogonal_target(self, lab, rotation, square):
        """Тест цели, ортогональной всем степеням."""
        F = ElementaryTensor.power(square, 1)
        target = ElementaryTensor.power(square, 1, ["1/4"])
        report = lab.cyclic_residual(rotation, SPEC, F, target, 2)
        assert report.residual_sq == pytest.approx(1.0, abs=1e-9)
        assert report.relative == pytest.approx(1.0, abs=1e-9)
        assert report.rank == 1
        assert report.cut == 4

    def test_target_in_span(self, lab, rotation, square):
        """Тест цели U F из линейной оболочки."""
        F = ElementaryTensor.power(square, 1)
        target = ElementaryTensor.power(square, 1, ["1/2"])
        report = lab.cyclic_residual(rotation, SPEC, F, target, 2)
        assert report.residual_sq == pytest.approx(0.0, abs=1e-9)
        assert report.slack == 0
        assert len(report.coefficients) == 5

    def test_zero_order(self, lab, rotation, square):
        """Тест K = 0 при цели F."""
        F = ElementaryTensor.power(square, 1)
        report = lab.cyclic_residual(rotation, SPEC, F, F, 0)
        assert report.residual_sq == pytest.approx(0.0, abs=1e-12)
        assert report.coefficients == pytest.approx((1.0,))

    def test_zero_vector(self, lab, rotation):
        """Тест нулевого вектора F."""
        zero = ElementaryTensor.power(StepFunction.indicator(1, 0, 1, 0), 1)
        with pytest.raises(IllConditioned):
            lab.cyclic_residual(rotation, SPEC, zero, zero, 1)

    def test_target_arity(self, lab, rotation, square):
        """Тест арности цели."""
        F = ElementaryTensor.power(square, 1)
        with pytest.raises(ArityMismatch):
            lab.cyclic_residual(rotation, SPEC, F, ElementaryTensor.power(square, 2), 1)

__all__ = ["CyclicProbeMethods", ]

from .cyclic_dimension_estimate import CyclicDimensionEstimateMixin
from .cyclic_residual import CyclicResidualMixin
from .krylov_gram import KrylovGramMixin


class CyclicProbeMethods(
    CyclicDimensionEstimateMixin,
    CyclicResidualMixin,
    KrylovGramMixin,
):
    """Реализует операции раздела циклических векторов."""
    pass

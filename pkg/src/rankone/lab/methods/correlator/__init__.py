__all__ = ["CorrelatorMethods", ]

from .correlate import CorrelateMixin
from .norm_sq import NormSqMixin
from .rigidity_defect import RigidityDefectMixin


class CorrelatorMethods(
    CorrelateMixin,
    NormSqMixin,
    RigidityDefectMixin,
):
    """Реализует операции раздела корреляций."""
    pass

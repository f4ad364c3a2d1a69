__all__ = ["FlowBuilderMethods", ]

from .advance_stage import AdvanceStageMixin
from .build_params import BuildParamsMixin
from .locate_point import PointTraversalMixin
from .refine_level import RefineLevelMixin


class FlowBuilderMethods(
    AdvanceStageMixin,
    BuildParamsMixin,
    PointTraversalMixin,
    RefineLevelMixin,
):
    """Реализует операции раздела построения потока."""
    pass

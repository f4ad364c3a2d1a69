from .core import LabConfig
from .methods import (
    CorrelatorMethods,
    CyclicProbeMethods,
    FlowBuilderMethods,
    LimitsMethods,
    MetricMethods,
    TensorLabMethods,
)


class Laboratory(
    CorrelatorMethods,
    CyclicProbeMethods,
    FlowBuilderMethods,
    LimitsMethods,
    MetricMethods,
    TensorLabMethods,
):
    """
    Основной класс лаборатории потоков ранга один.
    Объединяет все операции разделов в единый интерфейс.
    """
    pass

__all__ = ["Laboratory", "LabConfig"]

__all__ = [
    "CorrelatorMethods",
    "CyclicProbeMethods",
    "FlowBuilderMethods",
    "LimitsMethods",
    "MetricMethods",
    "TensorLabMethods",
]

from .correlator import CorrelatorMethods
from .cyclic_probe import CyclicProbeMethods
from .flow_builder import FlowBuilderMethods
from .limits import LimitsMethods
from .metric import MetricMethods
from .tensor_lab import TensorLabMethods

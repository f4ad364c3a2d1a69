"""Описывает модели раздела корреляций."""
__all__ = [
    "StepTerm",
    "StepFunction",
    "CorrelationInterval",
    "CorrelationResult",
]

from .functions import StepFunction, StepTerm
from .reports import CorrelationResult
from ..entities.intervals import CorrelationInterval

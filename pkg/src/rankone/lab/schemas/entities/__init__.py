__all__ = ["LabModel", "CorrelationInterval"]

from .base import LabModel
from .intervals import CorrelationInterval

"""Описывает модели раздела метрики на потоках."""
__all__ = [
    "MetricBasis",
    "FlowPair",
    "MetricEstimate",
    "TriangleAudit",
]

from .basis import FlowPair, MetricBasis
from .reports import MetricEstimate, TriangleAudit

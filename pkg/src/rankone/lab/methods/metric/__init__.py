__all__ = ["MetricMethods", ]

from .audit_triangle import AuditTriangleMixin
from .default_metric_basis import DefaultMetricBasisMixin
from .metric_d import MetricDMixin
from .rho import RhoMixin
from .sample_flows import SampleFlowsMixin


class MetricMethods(
    AuditTriangleMixin,
    DefaultMetricBasisMixin,
    MetricDMixin,
    RhoMixin,
    SampleFlowsMixin,
):
    """Реализует операции раздела метрики на потоках."""
    pass

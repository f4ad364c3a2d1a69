__all__ = ["LimitsMethods", ]

from .check_middle_decay import CheckMiddleDecayMixin
from .check_rigidity import CheckRigidityMixin
from .check_special_limit import CheckSpecialLimitMixin
from .estimate_u import EstimateUMixin
from .lacunary_indices import LacunaryIndicesMixin
from .rigidity_times import RigidityTimesMixin


class LimitsMethods(
    CheckMiddleDecayMixin,
    CheckRigidityMixin,
    CheckSpecialLimitMixin,
    EstimateUMixin,
    LacunaryIndicesMixin,
    RigidityTimesMixin,
):
    """Реализует операции раздела слабых пределов."""
    pass

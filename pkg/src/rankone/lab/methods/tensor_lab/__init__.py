__all__ = ["TensorLabMethods", ]

from .detect_relations import DetectRelationsMixin
from .evaluate_qj import EvaluateQjMixin
from .exp_correlate import ExpCorrelateMixin
from .expand_qj import ExpandQjMixin
from .predict_limit import PredictLimitMixin
from .rational_independence import RationalIndependenceMixin
from .sym_power_correlate import SymPowerCorrelateMixin
from .sym_product_profile import SymProductProfileMixin
from .tensor_correlate import TensorCorrelateMixin


class TensorLabMethods(
    DetectRelationsMixin,
    EvaluateQjMixin,
    ExpCorrelateMixin,
    ExpandQjMixin,
    PredictLimitMixin,
    RationalIndependenceMixin,
    SymPowerCorrelateMixin,
    SymProductProfileMixin,
    TensorCorrelateMixin,
):
    """Реализует операции раздела тензорных произведений."""
    pass

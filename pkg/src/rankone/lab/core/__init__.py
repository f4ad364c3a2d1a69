__all__ = [
    "LabConfig",
    "LabManager",
    "Tower",
    "LabError",
    "ConfigurationError",
    "NonAdmissibleSchedule",
    "NegativeSpacer",
    "StageOverflow",
    "UnknownStage",
    "UnrefinableStage",
    "ShiftTooLarge",
    "NotMeanZero",
    "NoStableCluster",
    "ArityMismatch",
    "DivergentTail",
    "IllConditioned",
    "IncompatibleFlows",
    "IoFailure",
]

from .config import LabConfig
from .core import LabManager
from .exceptions import (
    ArityMismatch,
    ConfigurationError,
    DivergentTail,
    IllConditioned,
    IncompatibleFlows,
    IoFailure,
    LabError,
    NegativeSpacer,
    NoStableCluster,
    NonAdmissibleSchedule,
    NotMeanZero,
    ShiftTooLarge,
    StageOverflow,
    UnknownStage,
    UnrefinableStage,
)
from .tower import Tower

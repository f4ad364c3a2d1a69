__all__ = [
    "MeasureMode",
    "SpacerKind",
    "RigidityTime",
    "FactorSymbol",
    "UMode",
    "OutputFormat",
    "Subcommand",
]

from .flows import MeasureMode, SpacerKind, RigidityTime
from .reports import OutputFormat, Subcommand
from .tensors import FactorSymbol, UMode

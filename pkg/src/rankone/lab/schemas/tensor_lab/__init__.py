"""Описывает модели раздела тензорных произведений."""
__all__ = [
    "TensorFactor",
    "ElementaryTensor",
    "QjSpec",
    "SymPowerSpec",
    "ExpansionTerm",
    "FactorExpansion",
    "QjExpansion",
    "RelationVector",
    "LimitTerm",
    "LimitPrediction",
    "IndependenceReport",
    "SymProfileRow",
]

from .limits import (
    ExpansionTerm,
    FactorExpansion,
    IndependenceReport,
    LimitPrediction,
    LimitTerm,
    QjExpansion,
    RelationVector,
    SymProfileRow,
)
from .tensors import ElementaryTensor, QjSpec, SymPowerSpec, TensorFactor

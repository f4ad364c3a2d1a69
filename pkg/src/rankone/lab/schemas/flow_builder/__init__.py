"""Описывает модели раздела построения потока."""
__all__ = [
    "SpacerRule",
    "FlowParams",
    "FlowSpec",
    "TowerStage",
    "StageTransition",
    "AdmissibilityRow",
    "LevelRef",
    "LevelSet",
    "PointLocation",
    "FlowPointResult",
]

from .levels import FlowPointResult, LevelRef, LevelSet, PointLocation
from .params import FlowParams, FlowSpec, SpacerRule
from .stages import AdmissibilityRow, StageTransition, TowerStage

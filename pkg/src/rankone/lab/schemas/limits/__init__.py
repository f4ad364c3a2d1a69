"""Описывает модели раздела слабых пределов."""
__all__ = [
    "LacunaryEntry",
    "LacunarySchedule",
    "MiddleDecaySpec",
    "SpecialLimitSpec",
    "RigidityRow",
    "MiddleDecayRow",
    "SpecialLimitRow",
    "SpecialSearchResult",
    "EvidenceRow",
    "LimitEstimate",
]

from .reports import (
    EvidenceRow,
    LimitEstimate,
    MiddleDecayRow,
    RigidityRow,
    SpecialLimitRow,
    SpecialSearchResult,
)
from .schedules import LacunaryEntry, LacunarySchedule
from .specs import MiddleDecaySpec, SpecialLimitSpec

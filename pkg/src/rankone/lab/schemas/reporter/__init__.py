"""Описывает модели отчетов."""
__all__ = [
    "ReportRecord",
    "ReportMetadata",
    "Report",
]

from .records import Report, ReportMetadata, ReportRecord

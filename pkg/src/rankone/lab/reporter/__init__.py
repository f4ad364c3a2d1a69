"""Конфигурация экспериментов, оркестрация проверок, отчеты и командная строка."""
__all__ = [
    "ExperimentConfig",
    "ExperimentRunner",
    "emit",
    "load_experiment",
    "parse_experiment",
    "parse_report",
    "run_experiment",
    "write_report",
]

from .config import ExperimentConfig, load_experiment, parse_experiment
from .emit import emit, parse_report, write_report
from .runner import ExperimentRunner, run_experiment

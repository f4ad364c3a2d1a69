from enum import Enum


class OutputFormat(str, Enum):
    """Формат отчета."""
    JSON = "json"
    CSV = "csv"


class Subcommand(str, Enum):
    """Подкоманды командной строки."""
    BUILD = "build"
    RIGIDITY = "rigidity"
    MIDDLE = "middle"
    SPECIAL = "special"
    THEOREM = "theorem"
    EXP = "exp"
    METRIC = "metric"
    ALL = "all"

"""Logging subsystem configuration model.

Defines the settings that drive the logging pipeline of the laboratory:
levels, text or JSON output, optional rotating log file and the
queue-based background pipeline.
"""
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LoggingSettings(BaseSettings):
    """Pydantic model for logging configuration parameters.

    Attributes:
        LEVEL: Minimum logging level. Defaults to 'INFO'.
        JSON: Emit one JSON document per record. Defaults to False.
        FORMAT: Format string for text records.
        USE_ASYNC: Route records through a queue listener thread.
            Defaults to False so console output keeps emission order.
        MAX_QUEUE_SIZE: Queue bound for the async pipeline.
        DIR: Directory for log files. File logging needs DIR and FILE.
        FILE: Log file name.
        MAX_BYTES: File size that triggers rotation. Defaults to 10MB.
        BACKUP_FILES_COUNT: Rotated files to keep. Defaults to 5.

    Environment variables:
        Every field can be set with the 'RANKONE_LOG_' prefix,
        e.g. RANKONE_LOG_LEVEL=DEBUG.
    """

    LEVEL: str = Field('INFO', pattern='^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$')
    JSON: bool = False
    FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    USE_ASYNC: bool = Field(False, description='Enable queue-based logging')
    MAX_QUEUE_SIZE: int = Field(10000, ge=1, description='Queue bound (async mode only)')
    DIR: Optional[str] = None
    FILE: Optional[str] = None
    MAX_BYTES: int = 10 * 1024 * 1024
    BACKUP_FILES_COUNT: int = Field(5, ge=0)

    @field_validator('LEVEL', mode='before')
    def normalize_level(cls, v):
        """Accepts lower-case level names."""
        return v.upper() if isinstance(v, str) else v

    model_config = SettingsConfigDict(
        env_prefix='RANKONE_LOG_',
        case_sensitive=False,
        extra='ignore',
    )

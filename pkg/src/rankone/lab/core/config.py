from logging import Logger
from typing import Optional

from ...infrastructure import logging

from pydantic import Field, field_validator, ConfigDict, model_validator
from pydantic_settings import BaseSettings


class LabConfig(BaseSettings):
    """Конфигурация лаборатории ранга один.

    Attributes:
        bit_budget: Предельная битовая длина рациональных величин конструкции (опционально)
        max_stage: Максимальный номер этапа конструкции башни (опционально)
        refinement_depth: Глубина измельчения J = j + depth для проверок по этапам (опционально)
        threads: Количество потоков для оркестрации проверок (опционально)
        solver_rcond: Относительный порог отсечения ранга в псевдообращении Грама (опционально)
        oracle_seed: Зерно генератора для оракулов Монте-Карло (опционально)
        max_retries: Максимальное количество повторов записи отчета (опционально)
        retry_min_wait: Минимальная задержка перед повтором записи в секундах (опционально)
        retry_max_wait: Максимальная задержка перед повтором записи в секундах (опционально)

        log_level: Уровень логирования (опционально)
        log_json: Выводить в JSON (опционально)
        log_format: Формат лога (опционально)
        log_use_async: True, чтобы включить асинхронный режим (опционально, по умолчанию False)
        log_max_queue_size: Максимальный размер очереди (опционально, только для асинхронного режима)
        log_dir: Адрес к директории с логами (опционально)
        log_file: Имя файла логов (опционально, при указании логирует в файл)
        log_max_bytes: Максимальный размер файла логов в байтах (опционально)
        log_backup_files_count: Кол-во файлов архивных логов, которые нужно хранить (опционально)

    Notes:
        Любой из атрибутов конфигурации можно задать в файле `.env`, расположенном в корне проекта.
        Правило наименования параметров в `.env`: `префикс RANKONE_ + имя параметра в верхнем регистре`.

        Например, для `bit_budget` строка в файле `.env` примет вид: `RANKONE_BIT_BUDGET=8192`
    """

    bit_budget: int = Field(
        default=4096,
        ge=64,
        description="Предельная битовая длина числителя или знаменателя величин конструкции",
    )
    max_stage: int = Field(
        default=8,
        ge=1,
        le=64,
        description="Максимальный номер этапа конструкции",
    )
    refinement_depth: int = Field(
        default=2,
        ge=1,
        description="Глубина измельчения для проверок по этапам",
    )
    threads: int = Field(
        default=1,
        ge=1,
        le=256,
        description="Количество потоков оркестратора",
    )
    solver_rcond: float = Field(
        default=1e-13,
        description="Относительный порог отсечения собственных чисел Грама",
    )
    oracle_seed: int = Field(
        default=20240611,
        ge=0,
        description="Зерно генератора для оракулов Монте-Карло",
    )
    max_retries: int = Field(
        default=3,
        ge=0,
        le=10,
        description="Максимальное количество повторов записи отчета",
    )
    retry_min_wait: float = Field(
        default=0.1,
        ge=0,
        description="Минимальная задержка перед повтором записи (сек)",
    )
    retry_max_wait: float = Field(
        default=2.0,
        ge=0,
        description="Максимальная задержка перед повтором записи (сек)",
    )

    log_level: Optional[str] = Field(
        'WARNING', pattern='^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$',
        description="Уровень логирования."
    )
    log_json: Optional[bool] = Field(
        False, description="Выводить в JSON."
    )
    log_format: Optional[str] = Field(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s', description="Формат лога."
    )
    log_use_async: Optional[bool] = Field(
        False, description='True, чтобы включить асинхронное логирование.'
    )
    log_max_queue_size: Optional[int] = Field(
        10000, description='Размер очереди (только для async mode).'
    )
    log_dir: Optional[str] = Field(
        None, description="Путь к директории с логами."
    )
    log_file: Optional[str] = Field(
        None, description="Название файла логов. Файловое логирование активируется предоставлением имени файла."
    )
    log_max_bytes: Optional[int] = Field(
        10 * 1024 * 1024, description="Максимальный размер лога."
    )
    log_backup_files_count: Optional[int] = Field(
        5, description="Кол-во архивных файлов."
    )
    logger: Optional[Logger] = Field(
        None, description="Корневой логер лаборатории. Поле заполняется системой."
    )

    @model_validator(mode="after")
    def get_logger(self):
        """Назначает корневой логер лаборатории."""
        if self.logger is None:
            self.logger = logging.manager.get_logger("lab")
        return self

    @field_validator("solver_rcond")
    def validate_rcond(cls, v: float) -> float:
        """Порог отсечения должен лежать в (0, 1)."""
        if not 0 < v < 1:
            raise ValueError("solver_rcond должен лежать в интервале (0, 1)")
        return v

    @model_validator(mode="after")
    def validate_retry_times(self):
        """Проверяет согласованность задержек повторов."""
        if self.retry_max_wait < self.retry_min_wait:
            raise ValueError("retry_max_wait должен быть больше или равен retry_min_wait")
        return self

    model_config = ConfigDict(
        env_prefix='RANKONE_',          #type: ignore
        case_sensitive=False,           #type: ignore
        extra='ignore',
        arbitrary_types_allowed=True,
    )

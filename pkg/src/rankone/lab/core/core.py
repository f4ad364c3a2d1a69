import threading
from logging import Logger
from types import TracebackType
from typing import TYPE_CHECKING, ClassVar, Optional

from dotenv import load_dotenv

from .config import LabConfig
from .tower import Tower

from ...infrastructure import logging
from ...infrastructure.logging import LoggingSettings

if TYPE_CHECKING:
    from ..schemas.flow_builder import FlowParams


class LabManager:
    """
    Базовый класс лаборатории.

    Хранит конфигурацию, логер экземпляра и кэш построенных башен.
    Башни разделяются между потоками: этапы после построения неизменяемы.
    """

    _class_logger: ClassVar[Logger] = LabConfig().logger

    def __init__(
            self,
            name: str = "default",
            config: Optional[LabConfig] = None,
    ) -> None:
        """
        Инициализация лаборатории.

        Args:
            name: Имя экземпляра, входит в домен логера
            config: Конфигурация лаборатории
        """
        self._config = self.load_config(config)
        self._name = name
        self._closed = False
        self._logging_manager = None
        self._instance_logger_number = None
        self._instance_logger: Logger = self._get_instance_logger()

        self._towers: dict["FlowParams", Tower] = {}
        self._towers_lock = threading.Lock()

        self.logger.debug("Лаборатория инициализирована")

    @classmethod
    def load_config(cls, user_config: LabConfig | None = None) -> LabConfig:
        """Создает конфигурацию с загрузкой из .env файла."""
        load_dotenv()
        base_config = LabConfig()

        if user_config is None:
            return base_config
        else:
            return base_config.model_copy(
                update=user_config.model_dump(
                    exclude_unset=True,
                    exclude_defaults=True
                )
            )

    def _get_instance_logger(self) -> Logger:
        """Инициализирует и возвращает настроенный логер для экземпляра.

        Последнее значение `[x]` в домене обозначает порядковый номер активного
        экземпляра лаборатории с данным именем.
        """

        log_instance_count = 1

        while True:
            self._logging_manager = logging.LoggerManager(
                f"rankone.lab[{self._name}]-[{log_instance_count}]"
            )

            try:
                self._logging_manager.configure(
                    LoggingSettings(
                        LEVEL=self._config.log_level,
                        JSON=self._config.log_json,
                        FORMAT=self._config.log_format,
                        USE_ASYNC=self._config.log_use_async,
                        MAX_QUEUE_SIZE=self._config.log_max_queue_size,
                        DIR=self._config.log_dir,
                        FILE=self._config.log_file,
                        MAX_BYTES=self._config.log_max_bytes,
                        BACKUP_FILES_COUNT=self._config.log_backup_files_count,
                    )
                )
            except RuntimeError:
                log_instance_count += 1
            else:
                self._instance_logger_number = log_instance_count
                break

        return self._logging_manager.get_logger()

    def _tower(self, params: "FlowParams") -> Tower:
        """Возвращает общую башню для параметров потока, создавая ее при первом обращении."""
        if self._closed:
            raise RuntimeError("Лаборатория закрыта")
        with self._towers_lock:
            tower = self._towers.get(params)
            if tower is None:
                tower = Tower(params)
                self._towers[params] = tower
                self.logger.debug(f"Создана башня для расписания {list(params.n_schedule)}")
        return tower

    def evaluation_stage(self, params: "FlowParams", j: int, depth: Optional[int] = None) -> int:
        """Этап измельчения J = j + depth, ограниченный последним этапом расписания."""
        depth = self._config.refinement_depth if depth is None else depth
        return min(j + depth, params.last_stage)

    def __enter__(self) -> "LabManager":
        if self._closed:
            raise RuntimeError(f"Невозможно использовать закрытую лабораторию {self._name}")
        return self

    def __exit__(
            self,
            exc_type: Optional[type[BaseException]],
            exc_val: Optional[BaseException],
            exc_tb: Optional[TracebackType],
    ) -> None:
        self.close()

    def close(self) -> None:
        if self._closed:
            return

        self._closed = True
        with self._towers_lock:
            self._towers.clear()

        self.logger.debug("Работа лаборатории завершена")
        self._logging_manager.shutdown()

    @property
    def name(self) -> str:
        """Имя экземпляра."""
        return self._name

    @property
    def config(self) -> LabConfig:
        """Конфигурация лаборатории."""
        return self._config

    @property
    def is_closed(self) -> bool:
        """Проверяет закрыта ли лаборатория."""
        return self._closed

    @property
    def logger(self):
        """Возвращает логер экземпляра."""
        return self._instance_logger

"""Construction of logging pipelines.

A pipeline is the set of output handlers (console, optional rotating
file) attached either directly to the domain logger or behind a queue
listener thread when async mode is enabled.
"""

import logging
import os
from logging.handlers import QueueHandler, QueueListener, RotatingFileHandler
from queue import Queue
from typing import Optional

from .formatters import get_formatter
from .settings import LoggingSettings


def create_handlers(settings: LoggingSettings, formatter: logging.Formatter) -> list[logging.Handler]:
    """Creates console and, when DIR and FILE are set, rotating file handlers."""
    console = logging.StreamHandler()
    console.setFormatter(formatter)
    handlers: list[logging.Handler] = [console]

    if settings.DIR and settings.FILE:
        os.makedirs(settings.DIR, exist_ok=True)
        file_handler = RotatingFileHandler(
            filename=os.path.join(settings.DIR, settings.FILE),
            maxBytes=settings.MAX_BYTES,
            backupCount=settings.BACKUP_FILES_COUNT,
            encoding='utf-8',
        )
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    return handlers


class LoggingPipeline:
    """Attaches output handlers to a domain logger.

    Handles:
    - level and propagation setup of the domain logger
    - sync mode (handlers on the logger) or async mode (queue + listener)
    - teardown of everything it attached
    """

    def __init__(self, settings: LoggingSettings):
        self.settings = settings
        self.formatter = get_formatter(settings.JSON, settings.FORMAT)
        self.handlers: list[logging.Handler] = []
        self.listener: Optional[QueueListener] = None

    def attach(self, logger: logging.Logger) -> logging.Logger:
        """Configures `logger` as the root of a domain."""
        logger.setLevel(self.settings.LEVEL)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()
        logger.propagate = False

        outputs = create_handlers(self.settings, self.formatter)

        if not self.settings.USE_ASYNC:
            for handler in outputs:
                logger.addHandler(handler)
            self.handlers = outputs
            return logger

        queue: Queue = Queue(maxsize=self.settings.MAX_QUEUE_SIZE)
        queue_handler = QueueHandler(queue)
        self.listener = QueueListener(queue, *outputs, respect_handler_level=True)
        logger.addHandler(queue_handler)
        self.handlers = [queue_handler, *outputs]
        self.listener.start()
        return logger

    def add_handler(self, logger: logging.Logger, handler: logging.Handler) -> None:
        """Adds an extra handler that will be closed on detach."""
        handler.setFormatter(self.formatter)
        logger.addHandler(handler)
        self.handlers.append(handler)

    def detach(self, logger: logging.Logger) -> None:
        """Stops the listener and closes every handler the pipeline created."""
        if self.listener is not None:
            self.listener.stop()
            self.listener = None
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
        for handler in self.handlers:
            handler.close()
        self.handlers = []

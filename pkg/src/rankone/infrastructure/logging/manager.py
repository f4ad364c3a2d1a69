"""Lifecycle management of domain loggers.

A domain (e.g. 'rankone' or 'rankone.lab[default]') is owned by exactly
one LoggerManager. Module loggers obtained from the manager are children
of the domain logger and propagate into its pipeline.
"""

import logging
import threading
from typing import Callable, Iterable, Optional

from .pipeline import LoggingPipeline
from .settings import LoggingSettings

HandlerFactory = Callable[[LoggingSettings, logging.Formatter], Iterable[logging.Handler]]


class LoggerManager:
    """Manages logging components lifecycle for a specific domain.

    Features:
    - domain isolation with a process-wide ownership registry
    - thread-safe configure/shutdown
    - child loggers sharing the domain pipeline
    """

    _owned_domains: set[str] = set()
    _registry_lock = threading.Lock()

    def __init__(self, domain: str):
        """Initialize manager for the specified domain.

        Args:
            domain: Root namespace for loggers (e.g. 'rankone.lab[default]')
        """
        self._domain = domain
        self._pipeline: Optional[LoggingPipeline] = None
        self._settings: Optional[LoggingSettings] = None
        self._children: dict[str, logging.Logger] = {}
        self._is_configured = False

    @property
    def domain(self) -> str:
        return self._domain

    @property
    def is_configured(self) -> bool:
        return self._is_configured

    def configure(
            self,
            settings: Optional[LoggingSettings] = None,
            custom_handler_factory: Optional[HandlerFactory] = None,
    ) -> None:
        """Configure the domain.

        Args:
            settings: Configuration parameters, defaults to LoggingSettings()
            custom_handler_factory: Optional callable receiving settings and the
                pipeline formatter and returning additional handlers.

        Raises:
            RuntimeError: If already configured or the domain belongs to another manager
            TypeError: If the factory is not callable or yields non-handlers
        """
        if self._is_configured:
            raise RuntimeError('LoggerManager already configured. Call shutdown() first.')

        with LoggerManager._registry_lock:
            if self._domain in LoggerManager._owned_domains:
                raise RuntimeError(f"Domain '{self._domain}' already configured by another manager")
            LoggerManager._owned_domains.add(self._domain)

        self._settings = settings or LoggingSettings()
        self._pipeline = LoggingPipeline(self._settings)
        root_logger = self._pipeline.attach(logging.getLogger(self._domain))

        try:
            if custom_handler_factory is not None:
                self._add_custom_handlers(root_logger, custom_handler_factory)
        except TypeError:
            self._release(root_logger)
            raise

        self._is_configured = True

    def get_logger(self, module_path: Optional[str] = None) -> logging.Logger:
        """Get the domain logger or a child logger ('stage' -> 'domain.stage').

        Raises:
            RuntimeError: If the manager is not configured
        """
        if not self._is_configured:
            raise RuntimeError('LoggerManager is not configured')

        if not module_path:
            return logging.getLogger(self._domain)

        full_name = f"{self._domain}.{module_path}"
        if full_name not in self._children:
            child = logging.getLogger(full_name)
            for handler in child.handlers[:]:
                child.removeHandler(handler)
            child.setLevel(logging.NOTSET)
            child.propagate = True
            self._children[full_name] = child
        return self._children[full_name]

    def shutdown(self) -> None:
        """Detach the pipeline and release the domain."""
        if not self._is_configured:
            return
        self._release(logging.getLogger(self._domain))
        self._children.clear()
        self._is_configured = False

    def _release(self, root_logger: logging.Logger) -> None:
        if self._pipeline is not None:
            self._pipeline.detach(root_logger)
            self._pipeline = None
        with LoggerManager._registry_lock:
            LoggerManager._owned_domains.discard(self._domain)

    def _add_custom_handlers(self, logger: logging.Logger, handler_factory: HandlerFactory) -> None:
        if not callable(handler_factory):
            raise TypeError(f'Handler factory `{handler_factory}` is not callable')
        custom_handlers = handler_factory(self._settings, self._pipeline.formatter)
        if not isinstance(custom_handlers, Iterable):
            raise TypeError('Handler factory must return an iterable')
        for handler in custom_handlers:
            if not isinstance(handler, logging.Handler):
                raise TypeError(f'Handler `{handler}` is not a logging.Handler')
            self._pipeline.add_handler(logger, handler)

    def __enter__(self) -> 'LoggerManager':
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()

    def __del__(self):
        try:
            self.shutdown()
        except Exception:
            pass

"""Domain-based logging subsystem of the laboratory.

Each Laboratory instance owns a domain logger ('rankone.lab[<name>]')
configured from its LabConfig; the package-wide 'rankone' domain is
configured on import with default settings.

Example Usage:
    >>> from rankone.infrastructure.logging import LoggerManager, LoggingSettings
    >>>
    >>> manager = LoggerManager('rankone.experiments')
    >>> manager.configure(LoggingSettings(LEVEL='DEBUG', JSON=True))
    >>> log = manager.get_logger('metric')   # 'rankone.experiments.metric'
    >>> log.info('grid ready', extra={'stage': 3, 'check_id': 'metric.rho'})
    >>> manager.shutdown()

Shutdown Behavior:
    - Stops the queue listener (async mode) and closes every handler
    - Releases the domain so another manager may configure it
    - Called automatically on context exit and in the destructor
"""

__all__ = ['LoggerManager', 'LoggingSettings', 'rankone_logger', 'manager']

from .manager import LoggerManager
from .settings import LoggingSettings

manager = LoggerManager('rankone')
manager.configure(LoggingSettings(LEVEL='WARNING'))

rankone_logger = manager.get_logger()

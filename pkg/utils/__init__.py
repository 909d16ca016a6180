"""
Utils package initialization.
Exposes the shared logger.
"""

from .logger import Logger, logger

__all__ = [
    "Logger",
    "logger",
]

"""
Logging utilities for fps-transcend
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Sequence
from .config import config


class FpsLogger:
    """Project logger: stderr console output plus an optional rotating file"""

    def __init__(self, name: str = "fps_transcend"):
        self.name = name
        self.logger = logging.getLogger(name)
        self._setup_logger()

    def _setup_logger(self) -> None:
        """Setup logger configuration"""
        log_settings = config.get_logging_settings()
        log_level = getattr(logging, str(log_settings.get('level', 'WARNING')).upper(), logging.WARNING)
        log_format = log_settings.get('format', '%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        log_file = log_settings.get('file')

        self.logger.setLevel(log_level)
        self.logger.propagate = False

        # Remove existing handlers
        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)

        formatter = logging.Formatter(log_format)

        # Console handler; stdout is reserved for JSON reports
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_file,
                maxBytes=int(log_settings.get('max_bytes', 10 * 1024 * 1024)),
                backupCount=int(log_settings.get('backup_count', 5)),
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def set_level(self, level: str) -> None:
        """Change the level at runtime (CLI --verbose)"""
        self.logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    def debug(self, message: str) -> None:
        self.logger.debug(message)

    def info(self, message: str) -> None:
        self.logger.info(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def log_command(self, argv: Sequence[str]) -> None:
        """Log an incoming CLI invocation"""
        self.info(f"argv: {' '.join(argv) or '<empty>'}")

    def log_error(self, error: Exception, context: str = "") -> None:
        """Log an unexpected failure with the command it happened in"""
        self.error(f"{context or 'parse'} failed: {type(error).__name__}: {error}")

    def log_result(self, command: str, status: str, duration: float) -> None:
        """One line per invocation: outcome and wall time"""
        self.info(f"{command or 'parse'} -> {status} in {duration:.3f}s")


# Global logger instance
logger = FpsLogger()

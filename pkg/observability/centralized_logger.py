"""
Centralized Logging for the Simplex Toolkit

Provides structured, searchable logging with JSON output for easy parsing.
Console output goes to stderr so command output on stdout stays byte-stable.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional


class StructuredLogger:
    """
    Structured logger that outputs JSON for easy searching and parsing.
    """

    def __init__(
        self,
        name: str,
        log_dir: Optional[str] = None,
        level: int = logging.INFO,
        max_bytes: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5
    ):
        """
        Initialize structured logger.

        Args:
            name: Logger name (usually module name)
            log_dir: Directory for JSON-lines log files (None disables file output)
            level: Logging level
            max_bytes: Max size per log file
            backup_count: Number of backup files to keep
        """
        self.name = name
        self.log_dir = Path(log_dir) if log_dir else None

        self.logger = logging.getLogger(f"structured.{name}")
        self.logger.setLevel(level)
        self.logger.propagate = False
        self.logger.handlers.clear()

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)
            json_handler = RotatingFileHandler(
                self.log_dir / f"{name}.jsonl",
                maxBytes=max_bytes,
                backupCount=backup_count
            )
            json_handler.setFormatter(JSONFormatter())
            self.logger.addHandler(json_handler)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(HumanReadableFormatter())
        self.logger.addHandler(console_handler)

    def _log(
        self,
        level: str,
        message: str,
        **kwargs: Any
    ) -> None:
        """
        Internal log method with structured data.

        Args:
            level: Log level (info, warning, error, etc.)
            message: Log message
            **kwargs: Additional structured data
        """
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": level.upper(),
            "logger": self.name,
            "message": message,
            **kwargs
        }
        log_method = getattr(self.logger, level.lower())
        log_method(json.dumps(log_data, default=str))

    def info(self, message: str, **kwargs: Any) -> None:
        """Log info message with structured data."""
        self._log("info", message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        """Log warning message with structured data."""
        self._log("warning", message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        """Log error message with structured data."""
        self._log("error", message, **kwargs)

    def debug(self, message: str, **kwargs: Any) -> None:
        """Log debug message with structured data."""
        self._log("debug", message, **kwargs)

    def log_oracle_run(
        self,
        oracle: str,
        params: str,
        duration_ms: float,
        **kwargs: Any
    ) -> None:
        """Log one oracle computation."""
        self._log(
            "debug",
            f"Oracle {oracle} on {params}",
            event_type="oracle_run",
            oracle=oracle,
            params=params,
            duration_ms=round(duration_ms, 3),
            **kwargs
        )

    def log_claim_result(
        self,
        claim_id: str,
        params: str,
        passed: bool,
        **kwargs: Any
    ) -> None:
        """Log a verified claim."""
        self._log(
            "info" if passed else "warning",
            f"Claim {claim_id} on {params} {'passed' if passed else 'failed'}",
            event_type="claim_result",
            claim_id=claim_id,
            params=params,
            passed=passed,
            **kwargs
        )

    def log_campaign(
        self,
        instances: int,
        claims: int,
        failed: int,
        duration_ms: float,
        **kwargs: Any
    ) -> None:
        """Log a finished verification campaign."""
        self._log(
            "info" if failed == 0 else "error",
            f"Campaign finished: {claims} claims on {instances} instances, {failed} failed",
            event_type="campaign",
            instances=instances,
            claims=claims,
            failed=failed,
            duration_ms=round(duration_ms, 3),
            **kwargs
        )


class JSONFormatter(logging.Formatter):
    """Formatter that outputs JSON for machine parsing."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        # The message is already JSON from StructuredLogger
        return record.getMessage()


class HumanReadableFormatter(logging.Formatter):
    """Formatter that outputs human-readable logs to console."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record for human reading."""
        try:
            log_data = json.loads(record.getMessage())
            level = log_data.get("level", "INFO")
            message = log_data.get("message", "")
            return f"{level:8s} {message}"
        except (json.JSONDecodeError, KeyError):
            return record.getMessage()


# Global logger instances
_loggers: Dict[str, StructuredLogger] = {}
_settings: Dict[str, Any] = {"level": logging.WARNING, "log_dir": None}


def configure_logging(level: str = "WARNING", log_dir: Optional[str] = None) -> None:
    """
    Set level and file directory for every structured logger.

    Existing loggers are rebuilt so the new settings apply immediately.
    """
    _settings["level"] = getattr(logging, level.upper(), logging.WARNING)
    _settings["log_dir"] = log_dir
    logging.basicConfig(level=_settings["level"], stream=sys.stderr)
    for name in list(_loggers):
        _loggers[name] = StructuredLogger(
            name, log_dir=_settings["log_dir"], level=_settings["level"]
        )


def get_logger(name: str) -> StructuredLogger:
    """
    Get or create a structured logger.

    Args:
        name: Logger name (usually __name__)

    Returns:
        StructuredLogger instance
    """
    if name not in _loggers:
        _loggers[name] = StructuredLogger(
            name, log_dir=_settings["log_dir"], level=_settings["level"]
        )
    return _loggers[name]

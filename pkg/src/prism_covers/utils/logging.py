"""Logging for prism-covers.

Everything logs below the ``prism_covers`` logger, which writes to stderr.
Long runs (enumeration, the cover pipeline) attach context such as the
signature and index with :func:`get_logger_with_context`; the structured
format prints that context as trailing ``key=value`` pairs.
"""

import logging
import sys
from collections.abc import Mapping
from typing import Any

ROOT = "prism_covers"

PLAIN_FORMAT = "%(levelname)s: %(message)s"
STRUCTURED_FORMAT = "%(asctime)s %(levelname)s %(name)s [%(relativeCreated)dms] %(message)s"


class StructuredFormatter(logging.Formatter):
    """Appends the record's context fields in insertion order."""

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        fields: Mapping[str, Any] = getattr(record, "extra_fields", None) or {}
        if not fields:
            return line
        return line + " " + " ".join(f"{key}={value}" for key, value in fields.items())


def level_for(verbose: bool = False, quiet: bool = False) -> str:
    """Log level chosen by the global CLI flags; ``verbose`` wins."""
    if verbose:
        return "DEBUG"
    return "WARNING" if quiet else "INFO"


def configure_logging(
    level: str = "INFO",
    format_string: str | None = None,
    structured: bool = False,
) -> None:
    """Install a single stderr handler on the package logger.

    Args:
        level: Log level name
        format_string: Overrides the plain or structured format
        structured: Timestamped lines with context fields
    """
    fmt = format_string or (STRUCTURED_FORMAT if structured else PLAIN_FORMAT)
    formatter = StructuredFormatter(fmt) if structured else logging.Formatter(fmt)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    package = logging.getLogger(ROOT)
    package.setLevel(level.upper())
    package.handlers = [handler]
    package.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Logger for ``name``, placed under the package logger."""
    if name != ROOT and not name.startswith(f"{ROOT}."):
        name = f"{ROOT}.{name}"
    return logging.getLogger(name)


class LoggerAdapter(logging.LoggerAdapter):  # type: ignore[type-arg]
    """Carries run context (signature, index, checkpoint) onto every record."""

    def process(self, msg: Any, kwargs: Any) -> tuple[Any, Any]:
        extra = dict(kwargs.get("extra") or {})
        # Per-call fields extend the bound context.
        extra["extra_fields"] = {**(self.extra or {}), **extra.pop("extra_fields", {})}
        kwargs["extra"] = extra
        return msg, kwargs

    def bind(self, **context: Any) -> "LoggerAdapter":
        """A new adapter with ``context`` added to this one's."""
        return LoggerAdapter(self.logger, {**(self.extra or {}), **context})


def get_logger_with_context(name: str, **context: Any) -> LoggerAdapter:
    """Logger whose records all carry ``context``."""
    return LoggerAdapter(get_logger(name), context)

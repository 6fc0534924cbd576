"""Utility modules for prism-covers."""

from prism_covers.utils.errors import PrismCoversError
from prism_covers.utils.logging import configure_logging, get_logger, get_logger_with_context

__all__ = ["PrismCoversError", "configure_logging", "get_logger", "get_logger_with_context"]

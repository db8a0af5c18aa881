"""
Utility functions for the knotobs library.
"""

from knotobs.utils.config import get_default_config, load_config
from knotobs.utils.logging import get_logger, setup_logging

__all__ = ["get_default_config", "get_logger", "load_config", "setup_logging"]

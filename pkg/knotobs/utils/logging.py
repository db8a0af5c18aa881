"""
Logging utilities for the knotobs library.
"""

import logging
import sys


def setup_logging(verbose: bool = False, quiet: bool = False) -> logging.Logger:
    """
    Set up logging for the knotobs library.

    Records go to stderr so that verdicts and scan records on stdout stay
    machine-readable.

    Args:
        verbose: Whether to enable debug logging.
        quiet: Whether to show warnings and errors only. Ignored when verbose.

    Returns:
        Logger instance.
    """
    if verbose:
        log_level = logging.DEBUG
    elif quiet:
        log_level = logging.WARNING
    else:
        log_level = logging.INFO

    logger = logging.getLogger("knotobs")
    logger.setLevel(log_level)

    # Repeated calls (tests, successive CLI invocations) must not stack handlers.
    if logger.hasHandlers():
        logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(
        logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
    )
    logger.addHandler(console_handler)

    return logger


def get_logger() -> logging.Logger:
    """
    Get the knotobs logger.

    Returns:
        Logger instance.
    """
    return logging.getLogger("knotobs")

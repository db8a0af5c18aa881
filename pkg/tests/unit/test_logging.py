import logging
import sys

from knotobs.utils.logging import get_logger, setup_logging


def test_setup_logging_idempotent():
    """setup_logging should not add duplicate handlers"""
    logger1 = setup_logging(verbose=True)
    handlers_after_first = len(logger1.handlers)
    logger2 = setup_logging(verbose=False)
    handlers_after_second = len(logger2.handlers)
    assert handlers_after_first == handlers_after_second == 1


def test_setup_logging_levels():
    """verbose wins over quiet; the default is INFO"""
    assert setup_logging().level == logging.INFO
    assert setup_logging(quiet=True).level == logging.WARNING
    assert setup_logging(verbose=True, quiet=True).level == logging.DEBUG


def test_logs_go_to_stderr():
    """stdout is reserved for verdicts and scan records"""
    logger = setup_logging()
    assert logger.handlers[0].stream is sys.stderr
    assert get_logger() is logger

import sys

from loguru import logger

from src.core.config import settings


def setup_logging(verbose: bool = False):
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if verbose else settings.LOG_LEVEL, backtrace=settings.DEBUG)

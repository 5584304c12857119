"""
CLI Error Handling Utilities

This module maps library exceptions to process exit codes and reports
failures consistently.

Exit codes:
    0  success
    1  unexpected failure
    2  usage error (bad flags, inconsistent options, invalid configuration)
    3  load error (dataset or loadings file missing or malformed)
    4  computation or validation error
"""

import logging
import sys
from typing import NoReturn

import click

from item_reducer.exceptions import (
    ConfigurationError,
    DatasetLoadError,
    ItemReducerError,
    LoadingsLoadError,
)

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_LOAD = 3
EXIT_COMPUTATION = 4


def exit_code_for(error: BaseException) -> int:
    """Return the documented exit code for ``error``."""
    if isinstance(error, ConfigurationError):
        return EXIT_USAGE
    if isinstance(error, (DatasetLoadError, LoadingsLoadError, OSError)):
        return EXIT_LOAD
    if isinstance(error, ItemReducerError):
        return EXIT_COMPUTATION
    return EXIT_UNEXPECTED


def handle_cli_error(error: Exception, error_msg: str, ctx: click.Context) -> NoReturn:
    """Report ``error`` on stderr and exit with its code."""
    LOGGER.error(error_msg)
    if ctx.obj and ctx.obj.get('verbose'):
        LOGGER.exception("Full traceback:")
    click.echo(f"❌ {error_msg}", err=True)
    sys.exit(exit_code_for(error))

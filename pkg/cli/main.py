"""
Item Reducer CLI Main Entry Point

This module serves as the main entry point for the item_reducer CLI,
bringing together all commands and providing the main CLI interface.
"""

import logging
import sys
from typing import Optional

import click

from cli.commands import (
    curve_command,
    rank_command,
    reduce_command,
    reliability_command,
    roc_command,
    summarize_command,
    synth_command,
)
from cli.utils.errors import EXIT_USAGE
from item_reducer import __version__
from item_reducer.config import config
from item_reducer.exceptions import ConfigurationError
from utils.logging_config import setup_logging

LOGGER = logging.getLogger(__name__)


@click.group()
@click.version_option(version=__version__)
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose (DEBUG) logging')
@click.option('--log-file', type=click.Path(dir_okay=False),
              help='Also write logs to this file (rotated)')
@click.pass_context
def cli(ctx: click.Context, verbose: bool, log_file: Optional[str]) -> None:
    """Item Reducer - AUC-driven item reduction for rating scales

    Rank questionnaire items by their individual AUC against a binary outcome,
    trace the AUC of the running total and keep the shortest item prefix at
    its peak. Also computes construct reliability from factor loadings and
    generates planted-signal synthetic datasets.
    """
    # Ensure ctx.obj exists and is a dict
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose

    setup_logging(
        level="DEBUG" if verbose else None,
        log_file=log_file or config.logging.log_file or None,
        max_files=config.logging.max_files)
    if verbose:
        LOGGER.debug("Verbose mode enabled")

    try:
        config.validate()
    except ConfigurationError as e:
        click.echo(f"❌ {e}", err=True)
        sys.exit(EXIT_USAGE)


# Add commands to the main CLI
cli.add_command(rank_command, name='rank')
cli.add_command(reduce_command, name='reduce')
cli.add_command(curve_command, name='curve')
cli.add_command(roc_command, name='roc')
cli.add_command(reliability_command, name='reliability')
cli.add_command(synth_command, name='synth')
cli.add_command(summarize_command, name='summarize')


if __name__ == '__main__':
    cli()

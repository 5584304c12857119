"""
Reliability Command

Construct reliability (CR) and variance extracted (VE) from factor loading
files, optionally comparing a full model against a reduced one.
"""

import logging
from typing import Optional

import click

from cli.services import ItemReducerService
from cli.utils import handle_cli_error, render_reliability, to_json
from cli.utils.options import DELIMITERS, format_option
from data_models.run_config import OutputFormat
from item_reducer.core.item_reduction import REPORT_SCHEMA_VERSION

LOGGER = logging.getLogger(__name__)

# Initialize service
SERVICE = ItemReducerService()


@click.command()
@click.argument('full_path', metavar='FULL', type=click.Path(dir_okay=False))
@click.argument('reduced_path', metavar='[REDUCED]', required=False, type=click.Path(dir_okay=False))
@click.option('--threshold', type=click.FloatRange(0.0, 1.0),
              help='Minimum acceptable reduced CR (default from configuration)')
@click.option('--standardized/--unstandardized', default=None,
              help='Whether loadings are standardized (|lambda| <= 1); defaults to the file\'s flag')
@click.option('--delimiter', type=click.Choice(list(DELIMITERS)), default='comma', show_default=True,
              help='Delimiter of text loading files')
@format_option
@click.pass_context
def reliability_command(ctx: click.Context, full_path: str, reduced_path: Optional[str],
                        threshold: Optional[float], standardized: Optional[bool],
                        delimiter: str, output_format: str) -> None:
    """Compute CR and VE for FULL, and compare with REDUCED when given.

    Loading files are delimited text (item_id,lambda[,delta]) or JSON.
    """
    try:
        if reduced_path is None:
            result = SERVICE.reliability(
                full_path, standardized=standardized, delimiter=DELIMITERS[delimiter])
            if output_format == OutputFormat.TABLE.value:
                click.echo(f"Items: {result['items']}")
                click.echo(f"CR:    {result['cr']:.3f}")
                click.echo(f"VE:    {result['ve']:.3f}")
            else:
                click.echo(to_json(result))
            return

        comparison = SERVICE.compare(
            full_path, reduced_path, threshold=threshold,
            standardized=standardized, delimiter=DELIMITERS[delimiter])
        if output_format == OutputFormat.TABLE.value:
            click.echo(render_reliability(comparison))
        else:
            click.echo(to_json({"schema_version": REPORT_SCHEMA_VERSION, **comparison.to_dict()}))
    except Exception as e:
        handle_cli_error(e, f"Failed to compute reliability: {e}", ctx)

"""
Shared click options for commands that read a dataset.
"""

from typing import Any, Callable, Optional, Sequence, Tuple, Union

import click

from cli.utils.validators import parse_label_column, parse_response_range
from data_models.run_config import IngestOptions, MissingPolicy, OutputFormat
from item_reducer.config import MISSING_POLICIES, config

DELIMITERS = {"comma": ",", "tab": "\t"}

F = Callable[..., Any]


def _default_delimiter_name() -> str:
    for name, delimiter in DELIMITERS.items():
        if delimiter == config.ingest.delimiter:
            return name
    return "comma"


def dataset_options(command: F) -> F:
    """Attach the INPUT argument and the ingest options to ``command``."""
    decorators = [
        click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False)),
        click.option("--label-column", default=config.ingest.label_column, show_default=True,
                     callback=parse_label_column,
                     help="0-based index or header name of the outcome column"),
        click.option("--delimiter", type=click.Choice(list(DELIMITERS)),
                     default=_default_delimiter_name(), show_default=True, help="Field delimiter"),
        click.option("--header/--no-header", "has_header", default=None,
                     help="Whether the first row is a header (auto-detected when omitted)"),
        click.option("--missing", "missing_policy", type=click.Choice(MISSING_POLICIES),
                     default=config.ingest.missing_policy, show_default=True,
                     help="Reject files with blank cells or drop the affected rows"),
        click.option("--response-range", callback=parse_response_range, metavar="LO-HI",
                     help="Declared inclusive range of item responses"),
        click.option("--workers", "max_workers", type=click.IntRange(min=1),
                     default=config.analysis.max_workers, show_default=True,
                     help="Threads used for per-item AUCs"),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def _format_choice(formats: Sequence[OutputFormat]) -> Callable[[F], F]:
    return click.option(
        "--format", "output_format", type=click.Choice([f.value for f in formats]),
        default=OutputFormat.JSON.value, show_default=True, help="Output format")


def format_option(command: F) -> F:
    """Attach ``--format json|table``."""
    return _format_choice((OutputFormat.JSON, OutputFormat.TABLE))(command)


def delimited_format_option(command: F) -> F:
    """Attach ``--format json|table|csv|tsv`` for commands with delimited tables."""
    return _format_choice(tuple(OutputFormat))(command)


def build_ingest_options(
        label_column: Union[int, str],
        delimiter: str,
        has_header: Optional[bool],
        missing_policy: str,
        response_range: Optional[Tuple[int, int]]) -> IngestOptions:
    """Turn parsed option values into IngestOptions."""
    return IngestOptions(
        delimiter=DELIMITERS[delimiter],
        has_header=has_header,
        label_column=label_column,
        missing_policy=MissingPolicy(missing_policy),
        response_range=response_range,
        encoding=config.ingest.encoding,
    )

"""
CLI Utilities Package

This package contains utility functions used by the CLI commands, including
formatters, validators, shared options, plotting and error handling.
"""

from .formatters import (
    format_auc,
    format_percent,
    to_json,
    render_item_auc_table,
    render_cumulative_table,
    render_item_auc_delimited,
    render_cumulative_delimited,
    render_reduction_summary,
    render_summary,
    render_reliability,
)
from .validators import (
    parse_response_range,
    parse_id_list,
    parse_signal_items,
    parse_label_column,
)
from .options import build_ingest_options, dataset_options, delimited_format_option, format_option
from .plotting import write_curve_svg
from .errors import exit_code_for, handle_cli_error

__all__ = [
    # Formatters
    "format_auc",
    "format_percent",
    "to_json",
    "render_item_auc_table",
    "render_cumulative_table",
    "render_item_auc_delimited",
    "render_cumulative_delimited",
    "render_reduction_summary",
    "render_summary",
    "render_reliability",
    # Validators
    "parse_response_range",
    "parse_id_list",
    "parse_signal_items",
    "parse_label_column",
    # Options
    "build_ingest_options",
    "dataset_options",
    "delimited_format_option",
    "format_option",
    # Plotting
    "write_curve_svg",
    # Error handling
    "exit_code_for",
    "handle_cli_error",
]

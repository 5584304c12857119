"""
Analysis Commands

This module contains the commands that read a dataset: per-item AUC ranking,
scale reduction, cumulative curves, ROC points and dataset summaries.
"""

import logging
from typing import Any, Dict, Optional, Tuple, Union

import click

from cli.services import ItemReducerService
from cli.utils import (
    build_ingest_options,
    dataset_options,
    delimited_format_option,
    format_option,
    handle_cli_error,
    parse_id_list,
    render_cumulative_delimited,
    render_cumulative_table,
    render_item_auc_delimited,
    render_item_auc_table,
    render_reduction_summary,
    render_summary,
    to_json,
    write_curve_svg,
)
from data_models.reduction import SelectionStrategy
from data_models.run_config import DELIMITED_FORMATS, OutputFormat, RunConfig
from item_reducer.config import config
from item_reducer.core.item_reduction import REPORT_SCHEMA_VERSION

LOGGER = logging.getLogger(__name__)

# Initialize service
SERVICE = ItemReducerService()

IngestArgs = Tuple[Union[int, str], str, Optional[bool], str, Optional[Tuple[int, int]]]


def _run_config(
        command: str,
        input_path: str,
        ingest_args: IngestArgs,
        max_workers: int,
        output_format: str = OutputFormat.JSON.value,
        strategy: str = config.analysis.default_strategy,
        plot_path: Optional[str] = None) -> RunConfig:
    return RunConfig(
        command=command,
        input_path=input_path,
        ingest=build_ingest_options(*ingest_args),
        strategy=SelectionStrategy(strategy),
        output_format=OutputFormat(output_format),
        plot_path=plot_path,
        max_workers=max_workers,
    )


@click.command()
@dataset_options
@delimited_format_option
@click.option('--descending/--ascending', default=False,
              help='Table row order (ascending by default; JSON is always best-first)')
@click.pass_context
def rank_command(ctx: click.Context, input_path: str, label_column: Union[int, str],
                 delimiter: str, has_header: Optional[bool], missing_policy: str,
                 response_range: Optional[Tuple[int, int]], max_workers: int,
                 output_format: str, descending: bool) -> None:
    """Rank items by their individual AUC."""
    try:
        run_config = _run_config(
            "rank", input_path,
            (label_column, delimiter, has_header, missing_policy, response_range),
            max_workers, output_format)
        table = SERVICE.rank(run_config)

        if run_config.output_format is OutputFormat.TABLE:
            click.echo(render_item_auc_table(table, descending=descending))
        elif run_config.output_format in DELIMITED_FORMATS:
            click.echo(render_item_auc_delimited(table, run_config.output_format, descending=descending))
        else:
            click.echo(to_json({
                "schema_version": REPORT_SCHEMA_VERSION,
                "items": [{"item": e.item_id, "auc": e.auc} for e in table.entries],
                "total_scale_auc": table.total_scale_auc,
            }))
    except Exception as e:
        handle_cli_error(e, f"Failed to rank items: {e}", ctx)


@click.command()
@dataset_options
@delimited_format_option
@click.option('--strategy', type=click.Choice([s.value for s in SelectionStrategy]),
              default=config.analysis.default_strategy, show_default=True,
              help='How the reduced subset is chosen')
@click.option('--plot', 'plot_path', type=click.Path(dir_okay=False),
              help='Write an SVG plot of the cumulative AUC curve')
@click.pass_context
def reduce_command(ctx: click.Context, input_path: str, label_column: Union[int, str],
                   delimiter: str, has_header: Optional[bool], missing_policy: str,
                   response_range: Optional[Tuple[int, int]], max_workers: int,
                   output_format: str, strategy: str, plot_path: Optional[str]) -> None:
    """Select the shortest item prefix with the highest running-total AUC."""
    try:
        run_config = _run_config(
            "reduce", input_path,
            (label_column, delimiter, has_header, missing_policy, response_range),
            max_workers, output_format, strategy, plot_path)
        scale = SERVICE.reduce(run_config)
        report = SERVICE.report(scale)

        if run_config.plot_path:
            write_curve_svg(scale.curve, run_config.plot_path, item_count=scale.item_count)

        if run_config.output_format is OutputFormat.TABLE:
            click.echo(render_cumulative_table(scale.curve))
            click.echo("")
            click.echo(render_reduction_summary(report))
        elif run_config.output_format in DELIMITED_FORMATS:
            click.echo(render_cumulative_delimited(
                scale.curve, run_config.output_format, selected=scale.selected_item_ids))
        else:
            click.echo(to_json(report))
    except Exception as e:
        handle_cli_error(e, f"Failed to reduce scale: {e}", ctx)


@click.command()
@dataset_options
@delimited_format_option
@click.option('--order', callback=parse_id_list, metavar='ID[,ID...]',
              help='Item order to accumulate (default: ranked by individual AUC)')
@click.option('--plot', 'plot_path', type=click.Path(dir_okay=False),
              help='Write an SVG plot of the curve')
@click.pass_context
def curve_command(ctx: click.Context, input_path: str, label_column: Union[int, str],
                  delimiter: str, has_header: Optional[bool], missing_policy: str,
                  response_range: Optional[Tuple[int, int]], max_workers: int,
                  output_format: str, order: Optional[Tuple[str, ...]],
                  plot_path: Optional[str]) -> None:
    """Trace the AUC of the running total as items are added."""
    try:
        run_config = _run_config(
            "curve", input_path,
            (label_column, delimiter, has_header, missing_policy, response_range),
            max_workers, output_format, plot_path=plot_path)
        curve = SERVICE.curve(run_config, order)

        if run_config.plot_path:
            write_curve_svg(curve, run_config.plot_path)

        if run_config.output_format is OutputFormat.TABLE:
            click.echo(render_cumulative_table(curve))
        elif run_config.output_format in DELIMITED_FORMATS:
            click.echo(render_cumulative_delimited(curve, run_config.output_format))
        else:
            click.echo(to_json(SERVICE.curve_report(curve)))
    except Exception as e:
        handle_cli_error(e, f"Failed to compute curve: {e}", ctx)


@click.command()
@dataset_options
@click.option('--item', 'item_id', help='Item to score (default: the all-items total)')
@click.pass_context
def roc_command(ctx: click.Context, input_path: str, label_column: Union[int, str],
                delimiter: str, has_header: Optional[bool], missing_policy: str,
                response_range: Optional[Tuple[int, int]], max_workers: int,
                item_id: Optional[str]) -> None:
    """ROC points, AUC and Gini for one item or the total score."""
    try:
        run_config = _run_config(
            "roc", input_path,
            (label_column, delimiter, has_header, missing_policy, response_range),
            max_workers)
        click.echo(to_json(SERVICE.roc(run_config, item_id)))
    except Exception as e:
        handle_cli_error(e, f"Failed to compute ROC: {e}", ctx)


@click.command()
@dataset_options
@format_option
@click.pass_context
def summarize_command(ctx: click.Context, input_path: str, label_column: Union[int, str],
                      delimiter: str, has_header: Optional[bool], missing_policy: str,
                      response_range: Optional[Tuple[int, int]], max_workers: int,
                      output_format: str) -> None:
    """Describe a dataset: counts, prevalence and item ranges."""
    try:
        run_config = _run_config(
            "summarize", input_path,
            (label_column, delimiter, has_header, missing_policy, response_range),
            max_workers, output_format)
        summary = SERVICE.summarize(run_config)

        if run_config.output_format is OutputFormat.TABLE:
            click.echo(render_summary(summary))
        else:
            payload: Dict[str, Any] = {"schema_version": REPORT_SCHEMA_VERSION, **summary.to_dict()}
            click.echo(to_json(payload))
    except Exception as e:
        handle_cli_error(e, f"Failed to summarize dataset: {e}", ctx)

"""
CLI Formatting Utilities

This module renders library results as text tables, delimited text and JSON.
Renderers only format values; they never recompute them.
"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from data_models.dataset import DatasetSummary
from data_models.loadings import ReliabilityComparison
from data_models.reduction import CumulativeAucCurve, ItemAucTable
from data_models.run_config import OutputFormat
from item_reducer.core.item_reduction import format_percent

# Constants
AUC_DIGITS = 6
CURVE_DIGITS = 3
ITEMS_PER_ROW = 7
FIELD_SEPARATORS = {OutputFormat.CSV: ",", OutputFormat.TSV: "\t"}

__all__ = [
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
]


def format_auc(value: float, digits: int = AUC_DIGITS) -> str:
    """Format an AUC with a fixed number of decimals."""
    return f"{value:.{digits}f}"


def to_json(payload: Dict[str, Any]) -> str:
    """Serialize a report with stable key order and two-space indentation."""
    return json.dumps(payload, indent=2)


def render_item_auc_table(table: ItemAucTable, descending: bool = False) -> str:
    """Two-column table of item ids and individual AUCs.

    Rows run in ascending AUC order unless ``descending`` is set.
    """
    entries = table.entries if descending else table.ascending()
    width = max(len("Item"), *(len(entry.item_id) for entry in entries))
    lines = [f"{'Item':<{width}}  AUC", "-" * (width + 2 + AUC_DIGITS + 2)]
    lines.extend(f"{entry.item_id:<{width}}  {format_auc(entry.auc)}" for entry in entries)
    lines.append(f"{'Total':<{width}}  {format_auc(table.total_scale_auc)}")
    return "\n".join(lines)


def render_cumulative_table(curve: CumulativeAucCurve, per_row: int = ITEMS_PER_ROW) -> str:
    """Running-total AUCs laid out in blocks: a row of item ids, then their AUCs."""
    blocks: List[str] = []
    steps = curve.steps
    for start in range(0, len(steps), per_row):
        chunk = steps[start:start + per_row]
        cells = [(step.item_id, format_auc(step.auc, CURVE_DIGITS)) for step in chunk]
        widths = [max(len(item_id), len(auc)) for item_id, auc in cells]
        blocks.append("  ".join(item_id.rjust(w) for (item_id, _), w in zip(cells, widths)))
        blocks.append("  ".join(auc.rjust(w) for (_, auc), w in zip(cells, widths)))
    return "\n".join(blocks)


def _delimited(frame: pd.DataFrame, output_format: OutputFormat) -> str:
    return frame.to_csv(
        sep=FIELD_SEPARATORS[output_format], index=False, lineterminator="\n",
        float_format=f"%.{AUC_DIGITS}f").rstrip("\n")


def render_item_auc_delimited(
        table: ItemAucTable,
        output_format: OutputFormat = OutputFormat.CSV,
        descending: bool = False) -> str:
    """The item AUC table as ``item,auc`` rows ending with the Total row."""
    entries = table.entries if descending else table.ascending()
    rows = [(entry.item_id, entry.auc) for entry in entries]
    rows.append(("Total", table.total_scale_auc))
    return _delimited(pd.DataFrame(rows, columns=["item", "auc"]), output_format)


def render_cumulative_delimited(
        curve: CumulativeAucCurve,
        output_format: OutputFormat = OutputFormat.CSV,
        selected: Sequence[str] = ()) -> str:
    """One ``k,item,auc`` row per running-total step.

    When ``selected`` is given a ``selected`` column flags the kept items.
    """
    frame = pd.DataFrame(
        [(step.size, step.item_id, step.auc) for step in curve.steps], columns=["k", "item", "auc"])
    if selected:
        frame["selected"] = frame["item"].isin(list(selected)).astype(int)
    return _delimited(frame, output_format)


def render_reduction_summary(report: Dict[str, Any]) -> str:
    """Short human-readable summary of a reduction report."""
    return "\n".join([
        f"Strategy:       {report['strategy']}",
        f"Selected items: {', '.join(report['selected'])}",
        f"Kept:           {report['selected_count']} of {report['item_count']} "
        f"({report['reduction_percent']})",
        f"Reduced AUC:    {format_auc(report['reduced_auc'])}",
        f"Full AUC:       {format_auc(report['full_auc'])}",
        f"AUC delta:      {report['auc_delta']:+.6f}",
    ])


def render_summary(summary: DatasetSummary) -> str:
    """Dataset counts and per-item observed ranges."""
    lines = [
        f"Respondents:  {summary.respondents}",
        f"Items:        {summary.items}",
        f"Positives:    {summary.positives} ({format_percent(summary.prevalence)})",
        f"Dropped rows: {summary.dropped_rows}",
        "",
        "Item ranges:",
    ]
    lines.extend(
        f"  {item_id}: {low}-{high}" for item_id, (low, high) in summary.response_ranges.items())
    return "\n".join(lines)


def render_reliability(comparison: ReliabilityComparison) -> str:
    """Side-by-side CR/VE table for a full and a reduced model."""
    lines = [
        f"{'Model':<8} {'Items':>5} {'CR':>7} {'VE':>7}",
        f"{'Full':<8} {comparison.full_items:>5} {comparison.full_cr:>7.3f} {comparison.full_ve:>7.3f}",
        f"{'Reduced':<8} {comparison.reduced_items:>5} "
        f"{comparison.reduced_cr:>7.3f} {comparison.reduced_ve:>7.3f}",
        "",
        f"Reduced CR >= {comparison.threshold:.2f}: {'yes' if comparison.acceptable else 'no'}",
        f"Reduced VE improved: {'yes' if comparison.reduced_ve_improved else 'no'}",
    ]
    return "\n".join(lines)

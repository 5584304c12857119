"""
SVG line plot of a cumulative AUC curve.

x is the fraction of items kept (k / K) on [0, 1]; y spans the curve's
range padded by 0.01 on each side. The peak is marked and labelled with its
item count and AUC.
"""

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import List, Optional, Tuple, Union

from data_models.reduction import CumulativeAucCurve
from item_reducer.config import PlotConfig, config
from item_reducer.core.item_reduction import peak_prefix_length
from utils.logging_config import get_logger

LOGGER = get_logger(__name__)

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
Y_PADDING = 0.01
TICKS = 5


def _svg_root(width: int, height: int) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns=SVG_NAMESPACE,
        version="1.1",
        width=f"{width}px",
        height=f"{height}px",
        viewBox=f"0 0 {width} {height}",
    )


def _polyline(parent: ET.Element, points: List[Tuple[float, float]], color: str) -> ET.Element:
    path = "M" + "L".join(f"{x:.2f} {y:.2f}" for x, y in points)
    return ET.SubElement(parent, "path", d=path, fill="none", stroke=color)


def _text(parent: ET.Element, x: float, y: float, label: str, anchor: str = "middle") -> ET.Element:
    element = ET.SubElement(
        parent, "text", x=f"{x:.2f}", y=f"{y:.2f}", **{"text-anchor": anchor, "font-size": "11"})
    element.text = label
    return element


def build_curve_svg(
        curve: CumulativeAucCurve,
        item_count: Optional[int] = None,
        plot_config: Optional[PlotConfig] = None) -> ET.Element:
    """Build the SVG element tree for ``curve``.

    Args:
        curve: Running-total AUCs, one step per added item.
        item_count: Denominator of the x axis; defaults to the curve length.
        plot_config: Geometry and colours; defaults to ``config.plot``.
    """
    plot_config = plot_config or config.plot
    width, height, margin = plot_config.width, plot_config.height, plot_config.margin
    item_count = item_count or len(curve)

    aucs = curve.aucs
    y_low, y_high = min(aucs) - Y_PADDING, max(aucs) + Y_PADDING

    def to_x(size: float) -> float:
        return margin + (size / item_count) * (width - 2 * margin)

    def to_y(auc: float) -> float:
        return height - margin - (auc - y_low) / (y_high - y_low) * (height - 2 * margin)

    svg = _svg_root(width, height)
    axes = ET.SubElement(svg, "g", stroke="black")
    _polyline(axes, [(to_x(0), to_y(y_high)), (to_x(0), to_y(y_low)), (to_x(item_count), to_y(y_low))],
              "black")

    labels = ET.SubElement(svg, "g")
    for tick in range(TICKS + 1):
        fraction = tick / TICKS
        _text(labels, to_x(fraction * item_count), height - margin + 16, f"{fraction:.1f}")
        auc = y_low + fraction * (y_high - y_low)
        _text(labels, margin - 6, to_y(auc) + 4, f"{auc:.3f}", anchor="end")
    _text(labels, width / 2, height - 12, "fraction of items kept")
    _text(labels, 14, height / 2, "AUC")

    line = ET.SubElement(svg, "g")
    _polyline(line, [(to_x(step.size), to_y(step.auc)) for step in curve.steps], plot_config.line_color)

    peak = peak_prefix_length(aucs)
    peak_auc = curve.auc_at(peak)
    marker = ET.SubElement(svg, "g", fill=plot_config.peak_color)
    ET.SubElement(marker, "circle", cx=f"{to_x(peak):.2f}", cy=f"{to_y(peak_auc):.2f}", r="4")
    _text(marker, to_x(peak), to_y(peak_auc) - 10, f"k={peak}, AUC={peak_auc:.3f}")
    return svg


def write_curve_svg(
        curve: CumulativeAucCurve,
        path: Union[str, Path],
        item_count: Optional[int] = None,
        plot_config: Optional[PlotConfig] = None) -> None:
    """Write the cumulative AUC plot to ``path``."""
    svg = build_curve_svg(curve, item_count=item_count, plot_config=plot_config)
    ET.ElementTree(svg).write(str(path), encoding="utf-8", xml_declaration=True)
    LOGGER.info("Wrote curve plot to %s", path)

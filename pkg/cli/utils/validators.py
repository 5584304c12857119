"""
CLI Option Validation Utilities

Click callbacks that parse and check option values. Each raises
``click.BadParameter`` so click reports a usage error (exit code 2).
"""

import re
from typing import Optional, Tuple, Union

import click

RANGE_PATTERN = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


def parse_response_range(
        _ctx: click.Context, _param: click.Parameter,
        value: Optional[str]) -> Optional[Tuple[int, int]]:
    """Parse ``LO-HI`` into an inclusive ``(low, high)`` pair."""
    if value is None:
        return None
    match = RANGE_PATTERN.fullmatch(value)
    if not match:
        raise click.BadParameter(f"expected LO-HI with non-negative integers, got {value!r}")
    low, high = int(match.group(1)), int(match.group(2))
    if high < low:
        raise click.BadParameter(f"upper bound {high} is below lower bound {low}")
    return low, high


def parse_id_list(
        _ctx: click.Context, _param: click.Parameter,
        value: Optional[str]) -> Optional[Tuple[str, ...]]:
    """Parse a comma-separated list of item ids."""
    if value is None:
        return None
    ids = tuple(part.strip() for part in value.split(","))
    if not all(ids):
        raise click.BadParameter(f"empty item id in {value!r}")
    return ids


def parse_signal_items(
        _ctx: click.Context, _param: click.Parameter,
        value: Optional[str]) -> Tuple[int, ...]:
    """Parse comma-separated 1-based item positions, e.g. ``1,2,3``."""
    if not value:
        return ()
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


def parse_label_column(
        _ctx: click.Context, _param: click.Parameter,
        value: str) -> Union[int, str]:
    """A 0-based column index or a header name."""
    value = value.strip()
    if value.isdigit():
        return int(value)
    if not value:
        raise click.BadParameter("label column must not be empty")
    return value

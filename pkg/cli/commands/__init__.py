"""
CLI Commands Package

This package contains the individual CLI command modules of item_reducer.
"""

from .analysis import (
    curve_command,
    rank_command,
    reduce_command,
    roc_command,
    summarize_command,
)
from .reliability import reliability_command
from .synth import synth_command

__all__ = [
    "rank_command",
    "reduce_command",
    "curve_command",
    "roc_command",
    "summarize_command",
    "reliability_command",
    "synth_command",
]

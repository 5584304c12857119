"""
Item Reducer CLI Package

This package provides the command-line interface of item_reducer: ranking
items by AUC, reducing a scale, tracing cumulative AUC curves, ROC output,
reliability calculation and synthetic data generation.
"""

from item_reducer import __version__

from .main import cli

__all__ = ["cli", "__version__"]

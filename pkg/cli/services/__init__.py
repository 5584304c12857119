"""
CLI Services Package

This package contains the service class that runs library operations for
the CLI commands.
"""

from .item_reducer_service import ItemReducerService

__all__ = ["ItemReducerService"]

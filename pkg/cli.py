#!/usr/bin/env python3
"""
Item Reducer CLI Entry Point

This is the main entry point for the item_reducer CLI. It imports and runs
the CLI.
"""

from cli import cli

if __name__ == '__main__':
    cli()

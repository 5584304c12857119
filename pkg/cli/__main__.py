"""
Runs the item_reducer command group with ``python -m cli``.
"""

from cli import cli

if __name__ == '__main__':
    cli(prog_name="item-reducer")

"""
Synth Command

Writes a planted-signal synthetic dataset in the layout the analysis
commands read, plus a ``.spec.json`` sidecar recording how it was made.
"""

import logging
from typing import Tuple

import click

from cli.services import ItemReducerService
from cli.utils import handle_cli_error, parse_signal_items, to_json
from cli.utils.options import DELIMITERS
from data_models.generator_spec import GeneratorSpec
from item_reducer.config import config

LOGGER = logging.getLogger(__name__)

# Initialize service
SERVICE = ItemReducerService()


@click.command()
@click.argument('output_path', metavar='OUTPUT', type=click.Path(dir_okay=False))
@click.option('--respondents', '-m', type=int, default=config.synth.respondents, show_default=True,
              help='Number of respondents (rows)')
@click.option('--items', '-k', type=int, default=config.synth.items, show_default=True,
              help='Number of items (columns)')
@click.option('--signal-items', callback=parse_signal_items, default='', metavar='I[,I...]',
              help='1-based positions of the items that carry signal')
@click.option('--levels', 'response_levels', type=int, default=config.synth.response_levels,
              show_default=True, help='Response levels per item (responses 0..L-1)')
@click.option('--strength', 'signal_strength', type=float, default=config.synth.signal_strength,
              show_default=True, help='Latent shift of signal items for positive respondents')
@click.option('--prevalence', type=float, default=config.synth.prevalence, show_default=True,
              help='Probability that a respondent is positive')
@click.option('--seed', type=int, default=config.synth.seed, show_default=True, help='RNG seed')
@click.option('--delimiter', type=click.Choice(list(DELIMITERS)), default='comma', show_default=True,
              help='Field delimiter of the written file')
@click.pass_context
def synth_command(ctx: click.Context, output_path: str, respondents: int, items: int,
                  signal_items: Tuple[int, ...], response_levels: int, signal_strength: float,
                  prevalence: float, seed: int, delimiter: str) -> None:
    """Generate a synthetic dataset into OUTPUT."""
    try:
        spec = GeneratorSpec(
            respondents=respondents,
            items=items,
            signal_items=signal_items,
            response_levels=response_levels,
            signal_strength=signal_strength,
            prevalence=prevalence,
            seed=seed,
        )
        click.echo(to_json(SERVICE.synth(spec, output_path, delimiter=DELIMITERS[delimiter])))
    except Exception as e:
        handle_cli_error(e, f"Failed to generate dataset: {e}", ctx)

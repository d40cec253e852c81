"""Experiment commands (experiment maxsearch)."""

import click

from prefgeo.click.commands.command_factory import create_command, get_config
from prefgeo.click.utils_echo import echo_json
from prefgeo.core.arrangement.search import max_cell_search


@click.group(name='experiment', help='Randomized experiments')
def experiment_group():
    """Group for experiment commands."""
    pass


@create_command('maxsearch', 'Sample random l1 embeddings and report the largest cell counts')
def maxsearch(ctx, m, trials, seed):
    if seed is None:
        seed = get_config(ctx)["seed"]
    echo_json(max_cell_search(m, trials, seed))


experiment_group.add_command(maxsearch)

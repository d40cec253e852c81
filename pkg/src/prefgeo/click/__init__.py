"""prefgeo command-line interface.

This module provides the main CLI entry point for the prefgeo tool. It uses
Click to create a command group with version display, help, verbosity and
output control.

Commands:
    - bisector, degeneracies: pairwise geometry
    - areas: cell enumeration (with graph counts and SVG output)
    - recognize4, maximal: 4-candidate profiles
    - construct: extremal constructions
    - experiment maxsearch: random search for large profiles
"""
import logging

import click

import prefgeo.click.utils_echo as click_override


@click.group(invoke_without_command=True)
@click.version_option()
@click.help_option('-h', '--help')
@click.option("-np", "--no-print", is_flag=True, help="Suppress all output messages.")
@click.option("-v", "--verbose", count=True, help="Log to stderr (-v info, -vv debug).")
@click.option(
    '--config',
    'config_path',
    type=click.Path(dir_okay=False),
    required=False,
    help='Configuration file (default ~/.prefgeo/config.json)'
)
@click.pass_context
def cli(ctx: click.Context, no_print, verbose, config_path):
    """Exact preference geometry under the l1, l2 and linf norms.

    Args:
        ctx: Click context object for passing data between commands.
        no_print: Flag to suppress all output messages globally.
        verbose: Logging verbosity count.
        config_path: Optional configuration file location.
    """
    click_override.global_echo = not no_print

    level = [logging.WARNING, logging.INFO][verbose] if verbose < 2 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", force=True)

    if not click.get_current_context().invoked_subcommand:
        click.echo(cli.get_help(click.get_current_context()))

    ctx.ensure_object(dict)
    if config_path:
        ctx.obj['config_path'] = config_path


from prefgeo.click.commands import COMMANDS # noqa E402
for command in COMMANDS:
    cli.add_command(command)

"""Factory functions for generating Click commands.

create_command wraps a plain function with its COMMAND_PARAMS options, the
click context and handles_errors, which turns library errors into
"Error: ..." on stderr and the documented exit codes.
"""
import functools
import logging
import sys

import click

import prefgeo
from prefgeo.click.commands.params import COMMAND_PARAMS
from prefgeo.core.exceptions import (
    DegenerateEmbedding,
    DegenerateInput,
    DuplicateCandidates,
    IdenticalCandidates,
    MalformedDocument,
    PrefGeoError,
    WrongArity,
)

# Most specific first; anything else deriving from PrefGeoError exits with 1
EXIT_CODES = (
    (MalformedDocument, 2),
    (DuplicateCandidates, 2),
    (IdenticalCandidates, 3),
    (DegenerateEmbedding, 4),
    (DegenerateInput, 4),
    (WrongArity, 5),
)


def exit_code_for(error: PrefGeoError) -> int:
    for kind, code in EXIT_CODES:
        if isinstance(error, kind):
            return code
    return 1


def handles_errors(func):
    """Report PrefGeoError as "Error: ..." on stderr and exit with its code."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PrefGeoError as e:
            logging.debug(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sys.exit(exit_code_for(e))
    return wrapper


def get_config(ctx: click.Context) -> dict:
    """The CLI configuration, loaded on first use and cached on the root context."""
    obj = ctx.find_root().ensure_object(dict)
    if "config" not in obj:
        obj["config"] = prefgeo.load_config(obj.get("config_path"))
        logging.debug(f"configuration loaded: {obj['config']}")
    return obj["config"]


def create_command(command_name: str, help_text: str | None = None):
    """
    Decorator turning func(ctx, **options) into a Click command.

    Args:
        command_name: Command name; its options come from COMMAND_PARAMS
        help_text: Help text for the command

    Returns:
        Decorator producing the Click command
    """
    extra_params = COMMAND_PARAMS.get(command_name, [])

    def decorator(func):
        func = handles_errors(func)
        for param in reversed(extra_params):
            func = param(func)
        func = click.pass_context(func)
        return click.command(name=command_name, help=help_text or func.__doc__)(func)

    return decorator

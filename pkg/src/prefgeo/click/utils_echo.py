"""Output helpers for the Click CLI.

Results go to stdout as JSON documents or one-line file notices, and both
are silenced by -np/--no-print through global_echo. Warnings and errors go
to stderr and are never silenced.
"""
from pathlib import Path
from typing import Any

import click

from prefgeo.core.utils.json import dump_json

# cleared by -np/--no-print
global_echo = True


def echo(message: str = "") -> None:
    if global_echo:
        click.echo(message)


def echo_json(data: Any) -> None:
    """Echo a JSON document in the on-disk layout (4-space indent)."""
    echo(dump_json(data))


def echo_saved(what: str, path: str | Path) -> None:
    """One-line notice that a document was written, e.g. "p3 (18 rankings) written to p3.json"."""
    echo(f"{what} written to {path}")


def echo_warning(message: str) -> None:
    click.echo(f"Warning: {message}", err=True)

"""Parameter definitions for CLI commands."""

import click

from prefgeo.core.enums import NORM_CHOICES
from prefgeo.core.models.point import Point2


class PointParam(click.ParamType):
    """A planar point written "x,y"; each coordinate an integer, decimal or "p/q"."""
    name = "x,y"

    def convert(self, value, param, ctx):
        if isinstance(value, Point2):
            return value
        parts = str(value).split(",")
        if len(parts) != 2:
            self.fail(f"expected x,y but got {value!r}", param, ctx)
        try:
            return Point2(parts[0].strip(), parts[1].strip())
        except ValueError as e:
            self.fail(str(e), param, ctx)


POINT = PointParam()


# Common parameters used across multiple commands
def norm_option(required: bool = True):
    return click.option(
        '--norm',
        type=click.Choice(NORM_CHOICES),
        required=required,
        help='Distance norm: l1, l2 or linf'
    )


def embedding_option():
    return click.option(
        '--embedding',
        type=click.Path(exists=True, dir_okay=False),
        required=True,
        help='Embedding document (JSON)'
    )


def profile_option():
    return click.option(
        '--profile',
        type=click.Path(exists=True, dir_okay=False),
        required=True,
        help='Profile document (JSON)'
    )


def svg_option():
    return click.option(
        '--svg',
        type=click.Path(dir_okay=False, writable=True),
        help='Also write an SVG drawing to this path'
    )


def perturb_option():
    return click.option(
        '--perturb',
        is_flag=True,
        help='Repair a degenerate embedding with tiny exact nudges first'
    )


def out_option():
    return click.option(
        '--out',
        type=click.Path(dir_okay=False, writable=True),
        help='Write the document to this path instead of printing it'
    )


# Command-specific parameters
COMMAND_PARAMS = {
    'bisector': [
        norm_option(),
        click.option('--c1', type=POINT, required=True, help='First candidate, x,y'),
        click.option('--c2', type=POINT, required=True, help='Second candidate, x,y'),
        svg_option(),
    ],

    'areas': [
        norm_option(),
        embedding_option(),
        svg_option(),
        click.option('--graph', is_flag=True, help='Add graph counts and the Euler audit'),
        perturb_option(),
        click.option(
            '--workers',
            type=int,
            default=None,
            help='Processes for seed ranking (0 = physical cores; default from config)'
        ),
    ],

    'degeneracies': [
        norm_option(),
        embedding_option(),
        perturb_option(),
    ],

    'recognize4': [
        profile_option(),
    ],

    'construct': [
        click.option(
            '--family',
            type=click.Choice(['theta-m4', 'linf-last', 'l1-last']),
            required=True,
            help='Construction to emit'
        ),
        click.option('--m', type=click.IntRange(min=2), help='Candidate count (theta-m4)'),
        click.option('--d', type=click.IntRange(min=1), help='Dimension (linf-last, l1-last)'),
        click.option('--verify', is_flag=True, help='Also report the construction checks'),
        out_option(),
    ],

    'maximal': [
        click.option(
            '--which',
            type=click.Choice(['p0', 'p1', 'p2', 'p3']),
            required=True,
            help='Canonical maximal profile'
        ),
        out_option(),
    ],

    'maxsearch': [
        click.option('--m', type=click.IntRange(min=2), default=4, show_default=True, help='Candidate count'),
        click.option('--trials', type=click.IntRange(min=0), required=True, help='Random embeddings to sample'),
        click.option(
            '--seed',
            type=int,
            default=None,
            envvar='PREFGEO_SEED',
            help='Random seed (falls back to PREFGEO_SEED, then the config file)'
        ),
    ],
}

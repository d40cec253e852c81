"""Command modules for the prefgeo CLI."""

from prefgeo.click.commands.geometry import bisector, degeneracies
from prefgeo.click.commands.areas import areas
from prefgeo.click.commands.profiles import maximal, recognize4
from prefgeo.click.commands.construct import construct
from prefgeo.click.commands.experiment import experiment_group

COMMANDS = [bisector, degeneracies, areas, recognize4, maximal, construct, experiment_group]

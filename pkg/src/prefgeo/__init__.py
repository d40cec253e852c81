"""Exact preference geometry under the l1, l2 and linf norms.

This package builds the bisector hypersurfaces between candidates placed in
the plane, enumerates the preference regions they cut out, recognizes
4-candidate l2 profiles and generates the extremal constructions used to
measure how many distinct rankings an embedding can realize.

Configuration:
    User configuration is stored in ~/.prefgeo/
    CLI defaults (seed, worker count, SVG size) live in ~/.prefgeo/config.json
    The file is created on first CLI use; importing the library never
    touches the filesystem.
"""

import pathlib

from prefgeo.core.utils.json import touch_json

# User configuration directory
CONFIG_DIR = pathlib.Path.home() / ".prefgeo"

# CLI configuration file path
CONFIG_FILE = CONFIG_DIR / "config.json"

DEFAULT_CONFIG = {
    "seed": 0,
    "workers": 1,
    "svg": {"size": 640},
}


def load_config(path: str | pathlib.Path | None = None) -> dict:
    """Load the CLI configuration, creating it with defaults when missing.

    Args:
        path: Optional override of the configuration file location.

    Returns:
        dict: Stored values merged over DEFAULT_CONFIG.
    """
    path = pathlib.Path(path) if path else CONFIG_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    data = touch_json(path, default_data=DEFAULT_CONFIG)
    return {**DEFAULT_CONFIG, **data}

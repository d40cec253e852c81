import random

import pytest

from prefgeo.core.profiles.canonical import (
    CANONICAL,
    L1_MAXIMAL,
    L2_MAXIMAL,
    MIXED_PROFILE,
    MIXED_VOTERS,
    QUADRILATERAL,
    TRIANGLE,
)
from prefgeo.core.utils.json import save_json


@pytest.fixture
def l1_maximal():
    return L1_MAXIMAL


@pytest.fixture
def l2_maximal():
    return L2_MAXIMAL


@pytest.fixture
def triangle():
    return TRIANGLE


@pytest.fixture
def quadrilateral():
    return QUADRILATERAL


@pytest.fixture
def mixed_profile():
    return MIXED_PROFILE


@pytest.fixture
def mixed_voters():
    return MIXED_VOTERS


@pytest.fixture
def canonical():
    return CANONICAL


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path as a string."""
    def write(name, data):
        path = tmp_path / name
        save_json(path, data)
        return str(path)
    return write

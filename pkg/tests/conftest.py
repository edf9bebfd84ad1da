import pytest
from hypothesis import HealthCheck, settings

from bowditch.geometry import SpaceParams, make_space
from bowditch.recognition import Representation

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

MODULAR_A = [["1", "1"], ["1", "2"]]
MODULAR_B = [["1", "-1"], ["-1", "2"]]


@pytest.fixture
def plane():
    return make_space(SpaceParams("plane"))


@pytest.fixture
def space3():
    return make_space(SpaceParams("space3"))


@pytest.fixture
def tree():
    return make_space(SpaceParams("cayley_tree"))


@pytest.fixture
def modular():
    return Representation.build("plane", MODULAR_A, MODULAR_B)


def modular_rep():
    return Representation.build("plane", MODULAR_A, MODULAR_B)

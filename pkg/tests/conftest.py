import random

import pytest

from algebra.cyclo import CycScalar
from representations.action import action_representation
from representations.repcat import module_catalog


@pytest.fixture
def rng():
    return random.Random(20250101)


@pytest.fixture(scope="session")
def q3():
    return CycScalar.q_power(3)


@pytest.fixture(scope="session")
def catalog3():
    return {module.label: module for module in module_catalog(3)}


@pytest.fixture(scope="session")
def action3():
    return action_representation(3)

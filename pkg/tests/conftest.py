# -*- coding: utf-8 -*-

import pytest

from trajstat.model import driven_qubit, random_model
from trajstat.model import three_level_renewal, two_level_decay
from trajstat.utils import ConfigManager


@pytest.fixture(autouse=True)
def clean_overrides():
    yield
    ConfigManager().clear_overrides()


@pytest.fixture
def decay():
    return two_level_decay()


@pytest.fixture
def renewal():
    return three_level_renewal()


@pytest.fixture
def qubit():
    return driven_qubit()


@pytest.fixture
def random_3():
    return random_model(3, n_jumps=2, seed=7, spin_length=1)

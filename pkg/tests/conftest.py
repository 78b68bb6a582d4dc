import numpy as np
import pytest

from bellcoh.qstate import random_physical_params


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def random_states(rng):
    return random_physical_params(rng, 1000)

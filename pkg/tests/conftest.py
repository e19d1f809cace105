import numpy as np
import pytest

from cl13.fields import (
    build_pure_gauge,
    random_family,
    reduce_to_two_yang_mills,
    sample_points,
)
from cl13.subspaces import fixed_idempotent


@pytest.fixture(scope="session")
def t2():
    return fixed_idempotent("t2")


@pytest.fixture(scope="session")
def family():
    return random_family(3)


@pytest.fixture(scope="session")
def pure_gauge(family, t2):
    return build_pure_gauge(family, t2, 1.0)


@pytest.fixture(scope="session")
def reduced(pure_gauge):
    return reduce_to_two_yang_mills(pure_gauge)


@pytest.fixture(scope="session")
def points():
    return sample_points(11, 8)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260808)

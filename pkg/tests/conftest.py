import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wphodge.hodge import period_differential  # noqa: E402
from wphodge.jacring import jacobian_ring, random_quasi_smooth  # noqa: E402
from wphodge.polyalg import WeightSystem, fermat_polynomial  # noqa: E402


@pytest.fixture(scope="session")
def ws10():
    return WeightSystem((1, 1, 2, 5), 10)


@pytest.fixture(scope="session")
def f0(ws10):
    return fermat_polynomial(ws10)


@pytest.fixture(scope="session")
def model0(f0):
    return jacobian_ring(f0)


@pytest.fixture(scope="session")
def report0(model0):
    return period_differential(model0)


_random_models = {}


@pytest.fixture(scope="session")
def random_model(ws10):
    """Factory for seeded random quasi-smooth models of S_10, cached per session."""

    def get(seed):
        if seed not in _random_models:
            _random_models[seed] = jacobian_ring(random_quasi_smooth(ws10, seed))
        return _random_models[seed]

    return get

import os

import numpy as np
import pytest

from cayleyqmc.src.boundary import BoundaryPoint
from cayleyqmc.src.boundary import alpha_fixed
from cayleyqmc.src.boundary import boundary_from_orbit
from cayleyqmc.src.boundary import orbit
from cayleyqmc.src.boundary import solution_family

# 0.1, 0.25, ..., 2.95 and the end point 3.0
BETA_GRID = tuple(np.round(np.arange(0.1, 3.0, 0.15), 12)) + (3.0,)
ENGINE_BETAS = (0.5, 1.0, 2.0)


def pytest_collection_modifyitems(config, items):
    if os.environ.get('CAYLEYQMC_RUN_SLOW') == '1':
        return
    skip = pytest.mark.skip(reason='set CAYLEYQMC_RUN_SLOW=1 to run')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.fixture(params=ENGINE_BETAS)
def beta(request):
    return request.param


@pytest.fixture
def fixed_family():
    """alpha_0 family at beta = 1, deep enough for every engine."""
    return solution_family(alpha_fixed(1.0), 1.0, 13)


@pytest.fixture
def orbit_bc():
    """Non-scalar boundary data with a complex off-diagonal, beta = 1."""
    result = orbit(BoundaryPoint(1.0, 0.05), 1.0)
    return boundary_from_orbit(result, phase=0.3)

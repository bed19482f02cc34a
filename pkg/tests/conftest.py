import matplotlib
matplotlib.use('Agg')

import numpy as np
import pytest
from scipy.stats import unitary_group

from qdsim.states.density_matrix import DensityMatrix


def random_density_matrix(rng, dim: int = 9, rank: int | None = None):
    """ Ginibre-distributed state of the given rank (full rank by default) """
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@pytest.fixture
def rng():
    return np.random.default_rng(20100712)


@pytest.fixture
def random_states(rng):
    return [DensityMatrix(random_density_matrix(rng)) for _ in range(100)]


@pytest.fixture
def random_local_unitaries(rng):
    return [np.kron(unitary_group.rvs(3, random_state=rng), unitary_group.rvs(3, random_state=rng))
            for _ in range(50)]

import numpy as np
import pytest

from extgauss import measures


@pytest.fixture(scope="session")
def arctan_small():
    """A modest arctan measure shared across tests (construction is the cost)."""
    return measures.arctan_measure(n_nodes=129)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)

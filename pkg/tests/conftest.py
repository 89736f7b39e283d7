import numpy as np
import pytest

from dyckq.ledger import QueryLedger, SubroutineModel


@pytest.fixture
def model():
    return SubroutineModel(rng_seed=0)


@pytest.fixture
def ledger():
    return QueryLedger()


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(0))

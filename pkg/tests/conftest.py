import numpy as np
import pytest

from catsharp.fincat import chain_category, commutative_square, graph_indexing_category, terminal_category
from catsharp.monad import monad_identity, monad_list, monad_path, monad_smc
from catsharp.theory import theory_category


@pytest.fixture(scope="session")
def g():
    return graph_indexing_category()


@pytest.fixture(scope="session")
def terminal_cat():
    return terminal_category()


@pytest.fixture(scope="session")
def square():
    return commutative_square()


@pytest.fixture(scope="session", params=[0, 1, 2, 3], ids=lambda n: f"[{n}]")
def chain(request):
    return chain_category(request.param)


@pytest.fixture(scope="module")
def path():
    return monad_path()


@pytest.fixture(scope="module")
def lists():
    return monad_list()


@pytest.fixture(scope="module")
def smc():
    return monad_smc()


@pytest.fixture(scope="module")
def identity_square(square):
    return monad_identity(square)


@pytest.fixture(scope="module")
def theta_path(path):
    """``Θ_path`` on the vertex operation and edge operations ``0..3``."""
    return theory_category(path, ["v"] + [("e", n) for n in range(4)], bound=4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)

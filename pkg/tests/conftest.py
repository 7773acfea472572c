import numpy as np
import pytest

from gridcommunity.cases import load_case
from gridcommunity.grid import Branch, Bus, build_grid
from gridcommunity.modularity import build_modularity_matrix
from gridcommunity.weights import build_ecs


@pytest.fixture(scope="session")
def ieee14():
    return load_case("ieee14")


@pytest.fixture(scope="session")
def ieee33():
    return load_case("ieee33")


@pytest.fixture(scope="session")
def ieee118():
    return load_case("ieee118")


@pytest.fixture(scope="session")
def ieee14_matrix(ieee14):
    return build_modularity_matrix(build_ecs(ieee14))


@pytest.fixture(scope="session")
def ieee33_matrix(ieee33):
    return build_modularity_matrix(build_ecs(ieee33))


@pytest.fixture
def two_bus():
    """Single branch between a slack and one load bus."""
    buses = [Bus(0, "1", is_slack=True), Bus(1, "2")]
    branches = [Branch(0, 1, 0.01, 0.1, 100.0)]
    return build_grid(buses, branches)


@pytest.fixture
def triangle():
    """Three buses in a loop with identical branches."""
    buses = [Bus(0, "1", is_slack=True), Bus(1, "2"), Bus(2, "3")]
    branches = [
        Branch(0, 1, 0.02, 0.2, 90.0),
        Branch(1, 2, 0.02, 0.2, 90.0),
        Branch(0, 2, 0.02, 0.2, 90.0),
    ]
    return build_grid(buses, branches)


@pytest.fixture
def path5():
    """Five buses in a chain, uniform branches."""
    buses = [Bus(i, str(i + 1), is_slack=(i == 0)) for i in range(5)]
    branches = [Branch(i, i + 1, 0.01, 0.1, 100.0) for i in range(4)]
    return build_grid(buses, branches)


@pytest.fixture
def rng():
    return np.random.default_rng(20260816)

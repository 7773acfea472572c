import numpy as np
import pytest

from gridcommunity.errors import DegenerateGraphError
from gridcommunity.modularity import (
    ModularityMatrix,
    Partition,
    build_modularity_matrix,
    louvain,
    score_partition,
)
from gridcommunity.solvers import exhaustive_search
from gridcommunity.weights import EcsAdjacency, build_ecs

from oracles import (
    modularity_from_adjacency,
    modularity_from_coefficients,
    random_connected_adjacency,
)


def test_two_bus_matrix_is_exact_quarters(two_bus):
    b = build_modularity_matrix(build_ecs(two_bus)).coefficients
    # single branch of weight w: B = [[-1/4, 1/4], [1/4, -1/4]] with w
    # cancelling exactly
    assert b == pytest.approx(np.array([[-0.25, 0.25], [0.25, -0.25]]), abs=1e-15)


def test_row_sums_vanish(ieee14_matrix, ieee33_matrix):
    for matrix in (ieee14_matrix, ieee33_matrix):
        rows = matrix.coefficients.sum(axis=1)
        assert np.max(np.abs(rows)) <= 1e-9


def test_single_community_scores_zero(ieee14_matrix, ieee33_matrix):
    for matrix in (ieee14_matrix, ieee33_matrix):
        labels = np.zeros(matrix.n_buses, dtype=int)
        assert abs(score_partition(matrix, labels)) <= 1e-12


def test_symmetry(ieee14_matrix):
    b = ieee14_matrix.coefficients
    assert np.array_equal(b, b.T)


def test_score_matches_delta_sum_oracle(ieee14, rng):
    adj = build_ecs(ieee14)
    matrix = build_modularity_matrix(adj)
    for _ in range(20):
        k = int(rng.integers(1, 6))
        labels = rng.integers(0, k, size=ieee14.n_buses)
        got = score_partition(matrix, labels)
        assert got == pytest.approx(
            modularity_from_adjacency(adj.weights, labels), abs=1e-12)
        assert got == pytest.approx(
            modularity_from_coefficients(matrix.coefficients, labels), abs=1e-12)


def test_score_on_random_graphs(rng):
    for _ in range(10):
        n = int(rng.integers(3, 20))
        a = random_connected_adjacency(rng, n)
        matrix = build_modularity_matrix(EcsAdjacency.from_matrix(a))
        labels = rng.integers(0, 3, size=n)
        assert score_partition(matrix, labels) == pytest.approx(
            modularity_from_adjacency(a, labels), abs=1e-12)


def test_label_permutation_invariance(ieee33_matrix, rng):
    labels = rng.integers(0, 5, size=ieee33_matrix.n_buses)
    base = score_partition(ieee33_matrix, labels)
    for _ in range(8):
        perm = rng.permutation(5)
        relabeled = perm[labels]
        assert score_partition(ieee33_matrix, relabeled) == base  # bit-exact


def test_gap_labels_are_fine(ieee14_matrix):
    # labels need not be contiguous: {0, 7, 42} is a 3-community assignment
    compact = np.array([0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 1, 1, 1, 1])
    gappy = np.where(compact == 1, 7, np.where(compact == 2, 42, 0))
    assert score_partition(ieee14_matrix, gappy) == \
        score_partition(ieee14_matrix, compact)


def test_build_from_plain_array():
    a = np.array([[0.0, 2.0, 0.0], [2.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    matrix = build_modularity_matrix(a)
    assert isinstance(matrix, ModularityMatrix)
    assert matrix.n_buses == 3
    labels = np.array([0, 0, 1])
    assert score_partition(matrix, labels) == pytest.approx(
        modularity_from_adjacency(a, labels), abs=1e-14)


def test_degenerate_graph_raises():
    with pytest.raises(DegenerateGraphError):
        build_modularity_matrix(np.zeros((3, 3)))


def test_partition_container():
    p = Partition(assignment=[0, 1, 1, 0], k=2, score=0.5)
    assert p.assignment.dtype == np.int64
    assert p.n_communities == 2
    assert p.k == 2
    p = Partition(assignment=[3, 3, 3], k=5, score=0.0)
    assert p.n_communities == 1


# ---------------------------------------------------------------------------
# Louvain
# ---------------------------------------------------------------------------

def test_louvain_two_bus_stays_together(two_bus):
    p = louvain(build_ecs(two_bus))
    assert p.n_communities == 1
    assert p.score == pytest.approx(0.0, abs=1e-12)


def test_louvain_score_is_consistent(ieee14, ieee33):
    for grid in (ieee14, ieee33):
        adj = build_ecs(grid)
        matrix = build_modularity_matrix(adj)
        p = louvain(adj)
        assert p.score == pytest.approx(
            score_partition(matrix, p.assignment), abs=1e-9)


def test_louvain_labels_are_compact(ieee33):
    p = louvain(build_ecs(ieee33))
    labels = p.assignment
    # first-appearance relabelling: community ids appear in bus order
    seen = []
    for c in labels:
        if c not in seen:
            seen.append(int(c))
    assert seen == list(range(p.n_communities))


def test_louvain_never_beats_exhaustive(rng):
    # Louvain is a greedy heuristic over unrestricted k; with k = n the
    # exhaustive optimum is an upper bound for any partition
    for _ in range(6):
        n = int(rng.integers(3, 8))
        a = random_connected_adjacency(rng, n)
        adj = EcsAdjacency.from_matrix(a)
        matrix = build_modularity_matrix(adj)
        p = louvain(adj)
        best = exhaustive_search(matrix, n)
        assert p.score <= best.score + 1e-12


def test_louvain_deterministic(ieee33):
    adj = build_ecs(ieee33)
    p1 = louvain(adj)
    p2 = louvain(adj)
    assert np.array_equal(p1.assignment, p2.assignment)
    assert p1.score == p2.score


def test_louvain_seeded_shuffle_is_valid(ieee33):
    adj = build_ecs(ieee33)
    matrix = build_modularity_matrix(adj)
    for seed in (0, 1, 2):
        p = louvain(adj, seed=seed)
        assert p.score == pytest.approx(
            score_partition(matrix, p.assignment), abs=1e-9)
        # same seed, same answer
        q = louvain(adj, seed=seed)
        assert np.array_equal(p.assignment, q.assignment)


def test_louvain_reference_values(ieee14, ieee33):
    p14 = louvain(build_ecs(ieee14))
    assert p14.n_communities == 3
    assert p14.score == pytest.approx(0.4193411222770009, abs=1e-9)
    p33 = louvain(build_ecs(ieee33))
    assert p33.n_communities == 7
    assert p33.score == pytest.approx(0.7069336604214264, abs=1e-9)

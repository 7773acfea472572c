import numpy as np
import pytest

from gridcommunity.errors import SingularSystemError, ValidationError
from gridcommunity.grid import Branch, Bus, Grid, build_grid
from gridcommunity.weights import (
    EcsAdjacency,
    admittance_weights,
    build_ecs,
    compute_ptdf,
    line_sensitivity_weights,
    normalized_weights,
)

from oracles import incidence_matrix, ptdf_oracle, random_grid


# ---------------------------------------------------------------------------
# PTDF
# ---------------------------------------------------------------------------

def test_ptdf_two_bus_is_exactly_one(two_bus):
    ptdf = compute_ptdf(two_bus)
    assert ptdf.values.shape == (1, 2)
    assert ptdf.slack_bus == 0
    assert ptdf.values[0, 0] == 0.0          # slack column identically zero
    assert abs(ptdf.values[0, 1]) == 1.0     # everything flows on the only path


def test_ptdf_triangle_splits_two_thirds(triangle):
    ptdf = compute_ptdf(triangle).values
    # injection at bus 1, slack withdrawal: 2/3 on the direct branch,
    # 1/3 around the long way
    col = np.abs(ptdf[:, 1])
    assert sorted(np.round(col, 12)) == pytest.approx([1 / 3, 1 / 3, 2 / 3])


def test_ptdf_matches_dense_solve_oracle(ieee14, ieee33, triangle):
    for grid in (ieee14, ieee33, triangle):
        got = compute_ptdf(grid).values
        want = ptdf_oracle(grid)
        assert np.max(np.abs(got - want)) <= 1e-9


def test_ptdf_slack_column_zero(ieee14, ieee33, ieee118):
    for grid in (ieee14, ieee33, ieee118):
        ptdf = compute_ptdf(grid)
        assert np.all(ptdf.values[:, grid.slack_bus] == 0.0)


def test_ptdf_nodal_balance(ieee14, ieee33):
    """Net flow out of each bus equals its injection (KCL at every node)."""
    for grid in (ieee14, ieee33):
        ptdf = compute_ptdf(grid).values
        inc = incidence_matrix(grid)
        for bus in range(grid.n_buses):
            net = inc.T @ ptdf[:, bus]
            want = np.zeros(grid.n_buses)
            want[bus] += 1.0
            want[grid.slack_bus] -= 1.0
            assert np.max(np.abs(net - want)) <= 1e-8


def test_ptdf_entries_bounded(ieee14, ieee33, ieee118):
    for grid in (ieee14, ieee33, ieee118):
        values = compute_ptdf(grid).values
        assert np.max(np.abs(values)) <= 1.0 + 1e-9


def test_ptdf_transaction_antisymmetry(ieee14):
    ptdf = compute_ptdf(ieee14).values
    for i in range(5):
        for j in range(5):
            fwd = ptdf[:, i] - ptdf[:, j]
            back = ptdf[:, j] - ptdf[:, i]
            assert np.array_equal(fwd, -back)


def test_ptdf_random_grids_against_oracle(rng):
    for _ in range(8):
        grid = random_grid(rng, int(rng.integers(4, 16)))
        got = compute_ptdf(grid).values
        want = ptdf_oracle(grid)
        assert np.max(np.abs(got - want)) <= 1e-9


def test_ptdf_singular_system_raises():
    # de-validated grid: a branch with absurd impedance producing a
    # numerically singular reduced system is the library's own guard,
    # exercised via a zero-reactance/zero-resistance pathological matrix
    grid = Grid(
        buses=(Bus(0, "a", is_slack=True), Bus(1, "b"), Bus(2, "c")),
        branches=(
            Branch(0, 1, 1.0, 0.0, 10.0),   # b = 0: bus 2 isolated in B
            Branch(0, 2, 1.0, 0.0, 10.0),
            Branch(1, 2, 1.0, 0.0, 10.0),
        ),
    )
    with pytest.raises(SingularSystemError):
        compute_ptdf(grid)


# ---------------------------------------------------------------------------
# Admittance weights
# ---------------------------------------------------------------------------

def test_admittance_magnitude_example():
    buses = [Bus(0, "a", is_slack=True), Bus(1, "b")]
    grid = build_grid(buses, [Branch(0, 1, 0.1, 0.2, 100.0)])
    y = admittance_weights(grid)
    assert y[0, 1] == pytest.approx(4.4721, abs=1e-4)
    assert y[0, 1] == pytest.approx(1.0 / abs(complex(0.1, 0.2)), rel=1e-12)


def test_admittance_symmetric_zero_diagonal(ieee14):
    y = admittance_weights(ieee14)
    assert np.array_equal(y, y.T)
    assert np.all(np.diag(y) == 0.0)
    # entries only on branch pairs
    branch_pairs = {(br.from_bus, br.to_bus) for br in ieee14.branches}
    for i in range(14):
        for j in range(i + 1, 14):
            on_branch = (i, j) in branch_pairs or (j, i) in branch_pairs
            assert (y[i, j] > 0) == on_branch


# ---------------------------------------------------------------------------
# Line-sensitivity weights
# ---------------------------------------------------------------------------

def test_sensitivity_triangle_value(triangle):
    ptdf = compute_ptdf(triangle)
    c = line_sensitivity_weights(triangle, ptdf)
    # for any bus pair the injection change splits 2/3 direct, 1/3 far side;
    # binding branch: rating 90 over sensitivity 2/3 -> 135
    expected = 90.0 / (2.0 / 3.0)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert c[i, j] == pytest.approx(expected, rel=1e-9)
    assert np.all(np.diag(c) == 0.0)


def test_sensitivity_two_bus(two_bus):
    c = line_sensitivity_weights(two_bus, compute_ptdf(two_bus))
    assert c[0, 1] == pytest.approx(100.0, rel=1e-12)


def test_sensitivity_nonadjacent_pairs_zero(path5):
    c = line_sensitivity_weights(path5, compute_ptdf(path5))
    # the coefficient is defined on branch pairs only
    assert c.shape == (5, 5)
    assert np.array_equal(c, c.T)
    for i in range(5):
        for j in range(5):
            adjacent = abs(i - j) == 1
            assert (c[i, j] > 0) == adjacent


def test_sensitivity_untouched_branches_excluded(triangle):
    # an absurdly large threshold marks every branch as untouched, which
    # is a modelling error worth failing loudly on
    ptdf = compute_ptdf(triangle)
    with pytest.raises(ValidationError, match="does not touch any branch"):
        line_sensitivity_weights(triangle, ptdf, eps=10.0)


def test_sensitivity_binding_branch_is_minimum(ieee14):
    ptdf = compute_ptdf(ieee14)
    c = line_sensitivity_weights(ieee14, ptdf)
    values = ptdf.values
    ratings = np.array([br.rating_mw for br in ieee14.branches])
    # re-derive the min for every branch pair the straightforward way
    for br in ieee14.branches:
        i, j = br.from_bus, br.to_bus
        sens = np.abs(values[:, i] - values[:, j])
        mask = sens > 1e-9
        want = np.min(ratings[mask] / sens[mask])
        assert c[i, j] == pytest.approx(want, rel=1e-12)


# ---------------------------------------------------------------------------
# Normalization and the composite ECS
# ---------------------------------------------------------------------------

def test_normalized_weights_mean_one_on_branch_pairs(ieee14, ieee33, ieee118):
    for grid in (ieee14, ieee33, ieee118):
        ybar, cbar = normalized_weights(grid)
        mask = np.zeros((grid.n_buses, grid.n_buses), dtype=bool)
        for br in grid.branches:
            mask[br.from_bus, br.to_bus] = True
            mask[br.to_bus, br.from_bus] = True
        upper = np.triu(mask)
        assert np.mean(ybar[upper]) == pytest.approx(1.0, rel=1e-12)
        assert np.mean(cbar[upper]) == pytest.approx(1.0, rel=1e-12)


def test_ecs_uniform_tree_weight_is_alpha_plus_beta(path5):
    # uniform branches: both normalized layers are exactly 1 on branches
    adj = build_ecs(path5, alpha=0.5, beta=0.5)
    for br in path5.branches:
        assert adj.weights[br.from_bus, br.to_bus] == pytest.approx(1.0, rel=1e-12)
    adj = build_ecs(path5, alpha=0.3, beta=0.9)
    for br in path5.branches:
        assert adj.weights[br.from_bus, br.to_bus] == pytest.approx(1.2, rel=1e-12)


def test_ecs_alpha_only_reduces_to_admittance_layer(ieee14):
    adj = build_ecs(ieee14, alpha=1.0, beta=0.0)
    ybar, _ = normalized_weights(ieee14)
    mask = adj.weights > 0
    assert np.allclose(adj.weights[mask], ybar[mask], rtol=0, atol=0)


def test_ecs_weights_only_on_branch_pairs(ieee33):
    adj = build_ecs(ieee33)
    branch_pairs = set()
    for br in ieee33.branches:
        branch_pairs.add((br.from_bus, br.to_bus))
        branch_pairs.add((br.to_bus, br.from_bus))
    nz = np.argwhere(adj.weights > 0)
    assert {(int(i), int(j)) for i, j in nz} == branch_pairs


def test_ecs_bookkeeping_consistent(ieee14, ieee33, ieee118):
    for grid in (ieee14, ieee33, ieee118):
        adj = build_ecs(grid)
        w = adj.weights
        assert np.array_equal(w, w.T)
        assert np.all(w >= 0)
        assert np.allclose(adj.degrees, w.sum(axis=1), rtol=1e-12, atol=0)
        assert adj.total_weight == pytest.approx(w.sum() / 2.0, rel=1e-12)
        assert adj.n_buses == grid.n_buses


def test_ecs_scale_invariance(ieee14):
    """Scaling all impedances or all ratings by a constant changes nothing."""
    base = build_ecs(ieee14).weights

    scaled_z = build_grid(
        list(ieee14.buses),
        [Branch(br.from_bus, br.to_bus, br.resistance_pu * 3.0,
                br.reactance_pu * 3.0, br.rating_mw, br.kind)
         for br in ieee14.branches],
    )
    assert np.allclose(build_ecs(scaled_z).weights, base, rtol=1e-10, atol=1e-12)

    scaled_r = build_grid(
        list(ieee14.buses),
        [Branch(br.from_bus, br.to_bus, br.resistance_pu,
                br.reactance_pu, br.rating_mw * 7.0, br.kind)
         for br in ieee14.branches],
    )
    assert np.allclose(build_ecs(scaled_r).weights, base, rtol=1e-10, atol=1e-12)


def test_ecs_rejects_bad_mixing():
    buses = [Bus(0, "a", is_slack=True), Bus(1, "b")]
    grid = build_grid(buses, [Branch(0, 1, 0.01, 0.1, 100.0)])
    with pytest.raises(ValidationError):
        build_ecs(grid, alpha=-0.1, beta=0.5)
    with pytest.raises(ValidationError):
        build_ecs(grid, alpha=0.0, beta=0.0)


def test_ecs_from_matrix_validation():
    good = np.array([[0.0, 1.0], [1.0, 0.0]])
    adj = EcsAdjacency.from_matrix(good)
    assert adj.total_weight == pytest.approx(1.0)
    with pytest.raises(ValidationError):
        EcsAdjacency.from_matrix(np.array([[0.0, 1.0], [2.0, 0.0]]))  # asymmetric
    with pytest.raises(ValidationError):
        EcsAdjacency.from_matrix(np.array([[1.0, 1.0], [1.0, 0.0]]))  # diagonal
    with pytest.raises(ValidationError):
        EcsAdjacency.from_matrix(np.array([[0.0, -1.0], [-1.0, 0.0]]))  # negative
    with pytest.raises(ValidationError):
        EcsAdjacency.from_matrix(np.ones((2, 3)))  # not square

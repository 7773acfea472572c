"""Electrical coupling strength (ECS) weights.

Two raw weight families are computed per branch-connected bus pair:

* admittance magnitude  ``Y_ij = 1 / |Z_ij|``
* line-sensitivity coefficient
  ``C_ij = min_l rating_l / |PTDF_l(i) - PTDF_l(j)|``
  taken over branches the transaction i->j actually touches.

Each family is normalized by its mean over branch pairs, and the composite
adjacency is ``A_ij = |alpha * Ybar_ij + beta * Cbar_ij|`` on branch pairs and
zero elsewhere.  The PTDF comes from a DC power-flow model with series
susceptances ``b = x / (r^2 + x^2)`` and the grid's slack bus as reference.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularSystemError, ValidationError
from .grid import Grid

#: sensitivities at or below this magnitude are treated as "branch unaffected"
SENSITIVITY_EPS = 1e-9


@dataclass(frozen=True)
class PtdfMatrix:
    """DC power-transfer distribution factors, one row per merged branch.

    ``values[l, i]`` is the fraction of a 1 MW injection at bus ``i``
    (withdrawn at the slack) that flows over branch ``l``, signed by the
    branch orientation from_bus -> to_bus.  The slack column is zero.
    """
    values: np.ndarray
    slack_bus: int


@dataclass(frozen=True)
class EcsAdjacency:
    """Composite weighted adjacency with its degree sequence and total weight."""
    weights: np.ndarray
    degrees: np.ndarray
    total_weight: float
    alpha: float
    beta: float

    @property
    def n_buses(self) -> int:
        return self.weights.shape[0]

    @classmethod
    def from_matrix(cls, weights: np.ndarray,
                    alpha: float = 1.0, beta: float = 0.0) -> "EcsAdjacency":
        """Wrap an arbitrary symmetric nonnegative adjacency matrix.

        Used for precomputed adjacencies (estimator input, synthetic graphs);
        degrees and total weight are derived from the matrix itself.
        """
        weights = np.asarray(weights, dtype=float)
        if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
            raise ValidationError("adjacency must be a square matrix")
        if not np.allclose(weights, weights.T, atol=1e-12):
            raise ValidationError("adjacency must be symmetric")
        if np.any(np.diag(weights) != 0.0):
            raise ValidationError("adjacency must have a zero diagonal")
        if np.any(weights < 0.0):
            raise ValidationError("adjacency must be nonnegative")
        degrees = weights.sum(axis=1)
        return cls(weights=weights, degrees=degrees,
                   total_weight=0.5 * degrees.sum(), alpha=alpha, beta=beta)


def _branch_mask(grid: Grid) -> np.ndarray:
    mask = np.zeros((grid.n_buses, grid.n_buses), dtype=bool)
    for br in grid.branches:
        mask[br.from_bus, br.to_bus] = True
        mask[br.to_bus, br.from_bus] = True
    return mask


def admittance_weights(grid: Grid) -> np.ndarray:
    """Raw |Y| matrix: 1/|Z| on branch pairs, zero elsewhere."""
    n = grid.n_buses
    Y = np.zeros((n, n))
    for br in grid.branches:
        y = 1.0 / abs(br.impedance)
        Y[br.from_bus, br.to_bus] = y
        Y[br.to_bus, br.from_bus] = y
    return Y


def compute_ptdf(grid: Grid) -> PtdfMatrix:
    """DC PTDF: reduce the bus susceptance matrix at the slack and invert."""
    n, m = grid.n_buses, grid.n_branches
    slack = grid.slack_bus
    incidence = np.zeros((m, n))
    b = np.zeros(m)
    for l, br in enumerate(grid.branches):
        incidence[l, br.from_bus] = 1.0
        incidence[l, br.to_bus] = -1.0
        r, x = br.resistance_pu, br.reactance_pu
        b[l] = x / (r * r + x * x)
    b_bus = incidence.T @ (b[:, None] * incidence)
    keep = np.array([i for i in range(n) if i != slack])
    reduced = b_bus[np.ix_(keep, keep)]
    try:
        inv = np.linalg.inv(reduced)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(
            "reduced susceptance matrix is singular") from exc
    values = np.zeros((m, n))
    values[:, keep] = (b[:, None] * incidence[:, keep]) @ inv
    return PtdfMatrix(values=values, slack_bus=slack)


def line_sensitivity_weights(grid: Grid, ptdf: PtdfMatrix,
                             eps: float = SENSITIVITY_EPS) -> np.ndarray:
    """Raw C matrix on branch pairs: the most limiting rating-to-sensitivity
    ratio of a unit transaction between the two buses."""
    n = grid.n_buses
    ratings = np.array([br.rating_mw for br in grid.branches])
    C = np.zeros((n, n))
    for br in grid.branches:
        i, j = br.from_bus, br.to_bus
        delta = np.abs(ptdf.values[:, i] - ptdf.values[:, j])
        affected = delta > eps
        if not affected.any():
            raise ValidationError(
                f"transaction ({i},{j}) does not touch any branch")
        c = float((ratings[affected] / delta[affected]).min())
        C[i, j] = c
        C[j, i] = c
    return C


def normalized_weights(grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """Both weight families, each divided by its mean over branch pairs."""
    mask = _branch_mask(grid)
    upper = np.triu(mask, 1)
    Y = admittance_weights(grid)
    C = line_sensitivity_weights(grid, compute_ptdf(grid))
    return Y / Y[upper].mean(), C / C[upper].mean()


def build_ecs(grid: Grid, alpha: float = 0.5, beta: float = 0.5) -> EcsAdjacency:
    """Assemble the composite ECS adjacency A^E.

    ``alpha`` weights the normalized admittance, ``beta`` the normalized line
    sensitivity; both must be nonnegative with a positive sum.  The default
    0.5/0.5 gives the two families equal influence.
    """
    if alpha < 0 or beta < 0 or alpha + beta == 0:
        raise ValidationError("alpha and beta must be >= 0 with alpha+beta > 0")
    mask = _branch_mask(grid)
    ybar, cbar = normalized_weights(grid)
    weights = np.where(mask, np.abs(alpha * ybar + beta * cbar), 0.0)
    degrees = weights.sum(axis=1)
    return EcsAdjacency(weights=weights, degrees=degrees,
                        total_weight=0.5 * degrees.sum(),
                        alpha=alpha, beta=beta)

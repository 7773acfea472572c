"""Electrical modularity: coefficient matrix, scoring, and a Louvain baseline.

The modularity of an assignment is ``Q = sum_{ij} B_ij delta(c_i, c_j)`` with

    B_ij = (1/2M) * (A_ij - d_i d_j / 2M)

where ``A`` is the ECS adjacency, ``d`` its weighted degrees, and ``M`` the
total edge weight.  ``B`` has zero row sums, so the one-community score is
exactly zero and every score is invariant under community relabelling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGraphError
from .weights import EcsAdjacency


@dataclass(frozen=True)
class ModularityMatrix:
    """Dense symmetric matrix of pairwise modularity contributions."""
    coefficients: np.ndarray

    @property
    def n_buses(self) -> int:
        return self.coefficients.shape[0]


@dataclass(frozen=True)
class Partition:
    """A community assignment together with the score it achieved."""
    assignment: np.ndarray
    k: int
    score: float

    def __post_init__(self):
        object.__setattr__(self, "assignment",
                           np.asarray(self.assignment, dtype=np.int64))

    @property
    def n_communities(self) -> int:
        """Number of labels actually used (k is only the allowed maximum)."""
        return int(np.unique(self.assignment).size)


def build_modularity_matrix(adj: EcsAdjacency | np.ndarray) -> ModularityMatrix:
    """Form B from an ECS adjacency (or any symmetric weighted adjacency)."""
    if not isinstance(adj, EcsAdjacency):
        adj = EcsAdjacency.from_matrix(np.asarray(adj, dtype=float))
    two_m = 2.0 * adj.total_weight
    if not two_m > 0.0:
        raise DegenerateGraphError("total edge weight is zero")
    d = adj.degrees
    coeffs = (adj.weights - np.outer(d, d) / two_m) / two_m
    return ModularityMatrix(coefficients=coeffs)


def _as_labels(matrix: ModularityMatrix, assignment) -> np.ndarray:
    labels = np.asarray(assignment, dtype=np.int64)
    n = matrix.n_buses
    if labels.shape != (n,):
        raise ValueError(f"assignment length {labels.shape} != bus count {n}")
    if labels.size and labels.min() < 0:
        raise ValueError("community labels must be nonnegative")
    return labels


def score_partition(matrix: ModularityMatrix, assignment) -> float:
    """Modularity of an assignment: sum of B over same-community pairs.

    Community contributions are combined with an exact (fsum) accumulation,
    so relabelling communities cannot change the result by even one ulp.
    """
    labels = _as_labels(matrix, assignment)
    B = matrix.coefficients
    parts = []
    for c in np.unique(labels):
        idx = np.flatnonzero(labels == c)
        parts.append(float(B[np.ix_(idx, idx)].sum()))
    parts.sort()
    return math.fsum(parts)


def _phase_moves(B: np.ndarray, rng: np.random.Generator | None) -> np.ndarray:
    """Greedy local moves until no strictly improving move exists.

    Nodes are visited in ascending order (or a seeded shuffle per pass); a
    node moves only for a strictly positive gain, so equal-gain alternatives
    keep it in its current community.
    """
    n = B.shape[0]
    labels = np.arange(n)
    # T[v, c] = sum of B[v, j] over nodes j currently labelled c
    T = B.copy()
    diag = np.diag(B)
    while True:
        moved = False
        order = np.arange(n) if rng is None else rng.permutation(n)
        for v in order:
            a = labels[v]
            gains = 2.0 * (T[v] - T[v, a] + diag[v])
            gains[a] = 0.0
            b = int(np.argmax(gains))
            if gains[b] > 1e-12:
                labels[v] = b
                T[:, a] -= B[:, v]
                T[:, b] += B[:, v]
                moved = True
        if not moved:
            return labels


def _aggregate(B: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    """Block-sum B by community: the quotient matrix scores coarse
    assignments identically to the fine assignments they induce."""
    onehot = np.zeros((B.shape[0], k))
    onehot[np.arange(B.shape[0]), labels] = 1.0
    return onehot.T @ B @ onehot


def louvain(adj: EcsAdjacency, seed: int | None = None) -> Partition:
    """Two-phase greedy modularity maximization; k is emergent.

    Deterministic for a given seed; with ``seed=None`` nodes are visited in
    ascending order.  Returns communities renumbered by first appearance.
    """
    matrix = build_modularity_matrix(adj)
    rng = None if seed is None else np.random.default_rng(seed)
    level_B = matrix.coefficients
    mapping = np.arange(level_B.shape[0])
    for _ in range(100):  # levels; far beyond any practical depth
        labels = _phase_moves(level_B, rng)
        used, compact = np.unique(labels, return_inverse=True)
        mapping = compact[mapping]
        if used.size == level_B.shape[0]:
            break
        level_B = _aggregate(level_B, compact, used.size)
    # renumber by first appearance for a stable, readable output
    _, first = np.unique(mapping, return_index=True)
    order = {mapping[i]: rank for rank, i in enumerate(np.sort(first))}
    final = np.array([order[c] for c in mapping], dtype=np.int64)
    k = int(final.max()) + 1 if final.size else 0
    return Partition(assignment=final, k=k,
                     score=score_partition(matrix, final))

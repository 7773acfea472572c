"""Scikit-learn style estimator facade over the partitioning pipeline."""
from __future__ import annotations

from numbers import Integral, Real
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .errors import GridCommunityError
from .grid import Grid, load_grid
from .modularity import build_modularity_matrix
from .solvers import EXHAUSTIVE_CAP, SOLVERS, AnnealParams, solve_partition
from .weights import EcsAdjacency, build_ecs


class GridPartitioner(ClusterMixin, BaseEstimator):
    """Partition an electrical grid into at most ``n_communities`` groups.

    Follows the scikit-learn clustering conventions: hyperparameters go to
    ``__init__`` unchanged, :meth:`fit` learns ``labels_`` (communities by
    bus), and :meth:`fit_predict` returns them.  Like other transductive
    clusterers there is no out-of-sample ``predict``.

    Parameters
    ----------
    n_communities : int, default=2
        Maximum number of communities k.  Solvers may leave some unused.
    solver : {'exhaustive', 'qubo-anneal', 'discrete-anneal', 'louvain'}, \
            default='discrete-anneal'
        Search strategy.  'louvain' ignores ``n_communities``.
    alpha, beta : float, default=0.5
        Mixing weights of the normalized admittance and line-sensitivity
        families.  Only consulted when fitting a Grid or case-file path;
        a precomputed adjacency is used as-is.
    penalty : float or 'auto', default='auto'
        One-hot penalty weight of the QUBO compilation ('qubo-anneal' only).
    num_reads, sweeps_per_read : int, default=1000
        Annealer effort per fit.
    seed : int, default=0
        Seed for the annealers' restarts (and Louvain's optional shuffle
        is not used here; Louvain visits buses in ascending order).
    exhaustive_cap : int, default=10_000_000
        Refusal threshold on k^n for the exhaustive solver.

    Attributes
    ----------
    labels_ : ndarray of shape (n_buses,)
        Community of each bus.
    modularity_ : float
        Electrical modularity of the fitted partition.
    partition_ : Partition
        Full result object (assignment, k, score).
    n_features_in_ : int
        Number of buses seen during fit.

    Examples
    --------
    >>> from gridcommunity.cases import load_case
    >>> model = GridPartitioner(n_communities=3, solver='exhaustive')
    >>> labels = model.fit_predict(load_case('ieee14'))
    >>> labels.shape
    (14,)
    """

    def __init__(self, n_communities: int = 2, solver: str = "discrete-anneal",
                 alpha: float = 0.5, beta: float = 0.5,
                 penalty: float | str = "auto", num_reads: int = 1000,
                 sweeps_per_read: int = 1000, seed: int = 0,
                 exhaustive_cap: int = EXHAUSTIVE_CAP):
        self.n_communities = n_communities
        self.solver = solver
        self.alpha = alpha
        self.beta = beta
        self.penalty = penalty
        self.num_reads = num_reads
        self.sweeps_per_read = sweeps_per_read
        self.seed = seed
        self.exhaustive_cap = exhaustive_cap

    def _check_params(self):
        if not isinstance(self.n_communities, Integral) or self.n_communities < 1:
            raise ValueError(
                f"n_communities must be a positive integer, got "
                f"{self.n_communities!r}")
        if self.solver not in SOLVERS:
            raise ValueError(f"solver must be one of {SOLVERS}, got "
                             f"{self.solver!r}")
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, Real) or value < 0:
                raise ValueError(f"{name} must be a nonnegative real")
        if self.penalty != "auto":
            if not isinstance(self.penalty, Real) or not self.penalty > 0:
                raise ValueError(
                    f"penalty must be 'auto' or a positive real, got "
                    f"{self.penalty!r}")

    def _as_adjacency(self, X) -> EcsAdjacency:
        if isinstance(X, EcsAdjacency):
            return X
        if isinstance(X, Grid):
            return build_ecs(X, alpha=self.alpha, beta=self.beta)
        if isinstance(X, (str, Path)):
            return build_ecs(load_grid(X), alpha=self.alpha, beta=self.beta)
        X = np.asarray(X, dtype=float)
        return EcsAdjacency.from_matrix(X)

    def fit(self, X, y=None):
        """Compute the community assignment of the buses in ``X``.

        Parameters
        ----------
        X : Grid, str or Path to a case file, EcsAdjacency, or a square
            symmetric nonnegative array taken as a precomputed adjacency.
        y : Ignored.
        """
        self._check_params()
        try:
            adj = self._as_adjacency(X)
            params = AnnealParams(num_reads=self.num_reads,
                                  sweeps_per_read=self.sweeps_per_read,
                                  seed=self.seed)
            partition = solve_partition(adj, int(self.n_communities),
                                        self.solver, params=params,
                                        penalty=self.penalty,
                                        cap=self.exhaustive_cap)
            matrix = build_modularity_matrix(adj)
        except GridCommunityError as exc:
            # bad input or an instance the configured solver refuses: both
            # are parameter/data problems in sklearn terms
            raise ValueError(str(exc)) from exc
        self.adjacency_ = adj
        self.matrix_ = matrix
        self.partition_ = partition
        self.labels_ = partition.assignment.copy()
        self.modularity_ = partition.score
        self.n_features_in_ = adj.n_buses
        return self

    def _more_tags(self):
        return {"X_types": ["2darray"], "allow_nan": False}

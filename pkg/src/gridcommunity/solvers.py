"""Partition solvers: annealers, exhaustive oracle, Louvain, and the k-sweep.

All solvers speak Partition.  The annealers run ``num_reads`` independent
restarts (read ``r`` seeds its RNG with ``seed ^ r``), each a geometric
beta-schedule Metropolis descent; results are aggregated energy-ascending.
Reported energies and scores are recomputed exactly from the model, never
trusted from the kernel's running accumulator.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InstanceTooLargeError, SolverError
from .grid import Grid
from .modularity import (ModularityMatrix, Partition, build_modularity_matrix,
                         louvain, score_partition)
from .qubo import (DiscreteModel, QuboModel, SampleSet, build_discrete,
                   build_qubo, decode, repair)
from .weights import EcsAdjacency, build_ecs

SOLVERS = ("exhaustive", "qubo-anneal", "discrete-anneal", "louvain")

#: refuse exhaustive enumeration above this many raw assignments k^n
EXHAUSTIVE_CAP = 10_000_000


@dataclass(frozen=True)
class AnnealParams:
    num_reads: int = 1000
    sweeps_per_read: int = 1000
    beta_min: float | None = None
    beta_max: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.num_reads < 1 or self.sweeps_per_read < 1:
            raise ValueError("num_reads and sweeps_per_read must be positive")
        if (self.beta_min is None) != (self.beta_max is None):
            raise ValueError("set both beta_min and beta_max, or neither")
        if self.beta_min is not None and not (0 < self.beta_min < self.beta_max):
            raise ValueError("need 0 < beta_min < beta_max")


def _auto_betas(abs_values: np.ndarray) -> tuple[float, float]:
    """Geometric schedule endpoints bracketing the single-move energy deltas:
    hot enough to accept any move, cold enough to freeze the smallest one."""
    nonzero = abs_values[abs_values > 0.0]
    if nonzero.size == 0:
        return 0.1, 1.0
    return (math.log(2.0) / float(nonzero.sum()),
            math.log(100.0) / float(nonzero.min()))


def _schedule(params: AnnealParams, abs_values: np.ndarray):
    if params.beta_min is not None:
        beta0, beta1 = params.beta_min, params.beta_max
    else:
        beta0, beta1 = _auto_betas(abs_values)
    sweeps = params.sweeps_per_read
    ratio = (beta1 / beta0) ** (1.0 / (sweeps - 1)) if sweeps > 1 else 1.0
    return beta0, ratio


def _read_seed(seed: int, read: int) -> int:
    return (seed ^ read) & 0xFFFFFFFF


def anneal_qubo(model: QuboModel, params: AnnealParams | None = None) -> SampleSet:
    """Simulated annealing over the binary variables of a QUBO."""
    params = params or AnnealParams()
    nv = model.n_variables
    quad = np.zeros((nv, nv))
    lin = np.zeros(nv)
    for (p, q), value in model.coefficients.items():
        if p == q:
            lin[p] = value
        else:
            quad[p, q] = value
            quad[q, p] = value
    beta0, ratio = _schedule(params, np.abs(
        np.concatenate([lin, quad[np.triu_indices(nv, 1)]])))
    pairs = []
    for read in range(params.num_reads):
        x = _kernels.anneal_qubo_read(
            quad, lin, params.sweeps_per_read, beta0, ratio,
            _read_seed(params.seed, read))
        xf = x.astype(float)
        exact = model.offset + lin @ xf + 0.5 * (xf @ quad @ xf)
        pairs.append((x, float(exact)))
    return SampleSet.from_pairs(pairs)


def anneal_discrete(model: DiscreteModel,
                    params: AnnealParams | None = None) -> SampleSet:
    """Simulated annealing over per-bus community labels (always feasible)."""
    params = params or AnnealParams()
    B = -model.interactions
    beta0, ratio = _schedule(params, 2.0 * np.abs(B))
    pairs = []
    for read in range(params.num_reads):
        labels = _kernels.anneal_discrete_read(
            B, model.k, params.sweeps_per_read, beta0, ratio,
            _read_seed(params.seed, read))
        same = labels[:, None] == labels[None, :]
        pairs.append((labels, float(model.interactions[same].sum())))
    return SampleSet.from_pairs(pairs)


def exhaustive_search(matrix: ModularityMatrix, k: int,
                      cap: int = EXHAUSTIVE_CAP) -> Partition:
    """Provably optimal partition into at most k communities.

    Enumerates canonical set partitions (restricted-growth strings), which
    kills the k! label symmetry, but still refuses when the raw assignment
    count k^n exceeds ``cap``.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    n = matrix.n_buses
    if k ** n > cap:
        raise InstanceTooLargeError(
            f"{k}^{n} assignments exceed the exhaustive cap of {cap:_}")
    _, labels = _kernels.exhaustive_search_kernel(matrix.coefficients, int(k))
    return Partition(assignment=labels, k=int(k),
                     score=score_partition(matrix, labels))


def solve_partition(adj: EcsAdjacency, k: int, solver: str,
                    params: AnnealParams | None = None,
                    penalty: float | str = "auto",
                    cap: int = EXHAUSTIVE_CAP) -> Partition:
    """Run one solver at one k and return its best partition.

    ``louvain`` ignores k (community count is emergent).  A QUBO-annealer
    sample that violates one-hot feasibility is repaired greedily before
    scoring; with the default auto penalty this is a rarely-needed fallback.
    """
    if solver not in SOLVERS:
        raise SolverError(f"unknown solver '{solver}' (choose from {SOLVERS})")
    if solver == "louvain":
        return louvain(adj, seed=None if params is None else params.seed)
    matrix = build_modularity_matrix(adj)
    if solver == "exhaustive":
        return exhaustive_search(matrix, k, cap=cap)
    if solver == "discrete-anneal":
        best = anneal_discrete(build_discrete(matrix, k), params).best
        return Partition(assignment=best.vector, k=int(k),
                         score=score_partition(matrix, best.vector))
    model = build_qubo(matrix, k, penalty=penalty)
    best = anneal_qubo(model, params).best
    result = decode(model, best.vector)
    if not isinstance(result, Partition):
        result = repair(model, best.vector, matrix)
    return result


@dataclass(frozen=True)
class SweepRecord:
    k: int
    partition: Partition
    energy: float
    seconds: float
    solver: str


@dataclass(frozen=True)
class SweepResult:
    records: tuple[SweepRecord, ...] = field(default_factory=tuple)

    @property
    def best(self) -> SweepRecord:
        if not self.records:
            raise ValueError("empty sweep")
        return max(self.records, key=lambda rec: rec.partition.score)


def sweep_k(grid: Grid, k_range, solver: str = "discrete-anneal",
            params: AnnealParams | None = None,
            alpha: float = 0.5, beta: float = 0.5,
            penalty: float | str = "auto",
            cap: int = EXHAUSTIVE_CAP) -> SweepResult:
    """Run one solver across a range of k on a grid, timing each run."""
    ks = [int(k) for k in k_range]
    if not ks:
        raise ValueError("empty k range")
    adj = build_ecs(grid, alpha=alpha, beta=beta)
    records = []
    for k in ks:
        start = time.perf_counter()
        part = solve_partition(adj, k, solver, params=params,
                               penalty=penalty, cap=cap)
        seconds = time.perf_counter() - start
        records.append(SweepRecord(k=k, partition=part, energy=-part.score,
                                   seconds=seconds, solver=solver))
    return SweepResult(records=tuple(records))

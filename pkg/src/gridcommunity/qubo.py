"""QUBO and discrete (categorical) compilations of k-way modularity search.

Binary encoding: variable ``(i, c)`` (bus i in community c) lives at flat
index ``i*k + c``.  The objective contributes ``-B_ij`` for every pair of
distinct buses sharing a community and ``-B_ii`` per assigned bus, so a
feasible vector's energy is exactly ``-Q_e`` of the decoded partition.  Each
bus carries a one-hot penalty ``lambda * (sum_c x_ic - 1)^2`` whose constant
part is tracked in ``offset`` rather than dropped.

The discrete model skips the encoding entirely: one k-valued variable per
bus, energy defined as ``-Q_e`` of the assignment, infeasibility impossible.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .modularity import ModularityMatrix, Partition, score_partition


@dataclass(frozen=True)
class VariableIndex:
    """Bijection between (bus, community) pairs and flat variable indices."""
    n: int
    k: int

    @property
    def n_variables(self) -> int:
        return self.n * self.k

    def flat(self, bus: int, community: int) -> int:
        if not (0 <= bus < self.n and 0 <= community < self.k):
            raise IndexError(f"({bus},{community}) outside {self.n}x{self.k}")
        return bus * self.k + community

    def pair(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.n_variables:
            raise IndexError(f"variable index {index} out of range")
        return divmod(index, self.k)


@dataclass(frozen=True)
class QuboModel:
    """Upper-triangular QUBO coefficients plus the tracked constant offset."""
    coefficients: dict[tuple[int, int], float]
    variables: VariableIndex
    penalty_lambda: float
    offset: float

    @property
    def n_variables(self) -> int:
        return self.variables.n_variables


@dataclass(frozen=True)
class DiscreteModel:
    """Categorical model: interactions[i, j] = -B_ij between equal cases."""
    interactions: np.ndarray
    k: int

    @property
    def n_variables(self) -> int:
        return self.interactions.shape[0]


@dataclass(frozen=True)
class Sample:
    vector: np.ndarray
    energy: float
    num_occurrences: int = 1


@dataclass(frozen=True)
class SampleSet:
    """Samples aggregated by vector and sorted ascending by energy."""
    samples: tuple[Sample, ...] = field(default_factory=tuple)

    @classmethod
    def from_pairs(cls, pairs) -> "SampleSet":
        counts: dict[tuple, list] = {}
        for vector, energy in pairs:
            key = tuple(int(v) for v in vector)
            entry = counts.setdefault(key, [energy, 0])
            entry[1] += 1
        ordered = sorted(counts.items(), key=lambda kv: (kv[1][0], kv[0]))
        return cls(samples=tuple(
            Sample(vector=np.array(key, dtype=np.int64), energy=val[0],
                   num_occurrences=val[1])
            for key, val in ordered))

    @property
    def best(self) -> Sample:
        if not self.samples:
            raise ValueError("empty sample set")
        return self.samples[0]

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)


@dataclass(frozen=True)
class InfeasibilityReport:
    """Buses whose one-hot constraint is violated, with their set-bit counts."""
    violations: dict[int, int]

    def __bool__(self) -> bool:
        return bool(self.violations)


def auto_penalty(matrix: ModularityMatrix) -> float:
    """Penalty weight that always beats the objective: 1 + sum|B_ij|."""
    return 1.0 + float(np.abs(matrix.coefficients).sum())


def build_qubo(matrix: ModularityMatrix, k: int,
               penalty: float | str = "auto") -> QuboModel:
    """Compile max-modularity over at-most-k communities to a QUBO."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if penalty == "auto":
        lam = auto_penalty(matrix)
    else:
        lam = float(penalty)
        if not lam > 0:
            raise ValueError("penalty must be positive")
    B = matrix.coefficients
    n = matrix.n_buses
    var = VariableIndex(n=n, k=int(k))
    coeffs: dict[tuple[int, int], float] = {}

    def add(p: int, q: int, value: float):
        if p > q:
            p, q = q, p
        coeffs[(p, q)] = float(coeffs.get((p, q), 0.0) + value)

    for i in range(n):
        for c in range(k):
            add(var.flat(i, c), var.flat(i, c), -B[i, i] - lam)
        for c in range(k):
            for c2 in range(c + 1, k):
                add(var.flat(i, c), var.flat(i, c2), 2.0 * lam)
        for j in range(i + 1, n):
            if B[i, j] == 0.0:
                continue
            for c in range(k):
                add(var.flat(i, c), var.flat(j, c), -2.0 * B[i, j])
    coeffs = {pq: v for pq, v in coeffs.items() if v != 0.0}
    return QuboModel(coefficients=coeffs, variables=var,
                     penalty_lambda=lam, offset=lam * n)


def build_discrete(matrix: ModularityMatrix, k: int) -> DiscreteModel:
    """Compile to the penalty-free categorical model (energy = -Q_e)."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return DiscreteModel(interactions=-matrix.coefficients, k=int(k))


def energy(model: QuboModel | DiscreteModel, x) -> float:
    """Energy of a bit vector (QUBO) or community assignment (discrete)."""
    if isinstance(model, QuboModel):
        bits = np.asarray(x)
        if bits.shape != (model.n_variables,):
            raise ValueError(
                f"expected {model.n_variables} bits, got {bits.shape}")
        total = model.offset
        for (p, q), value in model.coefficients.items():
            if p == q:
                total += value * bits[p]
            else:
                total += value * bits[p] * bits[q]
        return float(total)
    labels = np.asarray(x, dtype=np.int64)
    J = model.interactions
    if labels.shape != (J.shape[0],):
        raise ValueError(f"expected {J.shape[0]} labels, got {labels.shape}")
    if labels.size and (labels.min() < 0 or labels.max() >= model.k):
        raise ValueError("labels must lie in 0..k-1")
    same = labels[:, None] == labels[None, :]
    return float(J[same].sum())


def decode(model: QuboModel, x) -> Partition | InfeasibilityReport:
    """Recover the partition from a one-hot vector, or report violations.

    On feasible vectors the penalty contributes exactly zero, so the score
    is read off the energy identity Q_e = -energy(x).
    """
    bits = np.asarray(x).reshape(model.variables.n, model.variables.k)
    set_counts = bits.sum(axis=1)
    bad = {int(i): int(set_counts[i])
           for i in range(model.variables.n) if set_counts[i] != 1}
    if bad:
        return InfeasibilityReport(violations=bad)
    labels = bits.argmax(axis=1)
    return Partition(assignment=labels, k=model.variables.k,
                     score=-energy(model, np.asarray(x)))


def repair(model: QuboModel, x, matrix: ModularityMatrix) -> Partition:
    """Greedily reassign violating buses to their best marginal community.

    Buses with exactly one set bit keep their assignment; the rest are
    (re)assigned in ascending bus order to the community with the largest
    modularity gain given the buses assigned so far, ties to the lowest
    community index.
    """
    n, k = model.variables.n, model.variables.k
    bits = np.asarray(x).reshape(n, k)
    B = matrix.coefficients
    labels = np.full(n, -1, dtype=np.int64)
    feasible = bits.sum(axis=1) == 1
    labels[feasible] = bits[feasible].argmax(axis=1)
    for i in np.flatnonzero(~feasible):
        gains = np.zeros(k)
        for c in range(k):
            members = np.flatnonzero(labels == c)
            gains[c] = B[i, i] + 2.0 * B[i, members].sum()
        labels[i] = int(np.argmax(gains))  # argmax takes the lowest on ties
    return Partition(assignment=labels, k=k,
                     score=score_partition(matrix, labels))


def export_qubo_text(model: QuboModel) -> str:
    """Serialize as 'p q value' lines under a small header, for external tools."""
    lines = [
        f"# n {model.variables.n}",
        f"# k {model.variables.k}",
        f"# lambda {model.penalty_lambda!r}",
        f"# offset {model.offset!r}",
    ]
    for (p, q) in sorted(model.coefficients):
        lines.append(f"{p} {q} {model.coefficients[(p, q)]!r}")
    return "\n".join(lines) + "\n"

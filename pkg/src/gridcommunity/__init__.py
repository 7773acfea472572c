"""Community detection for electrical grids.

Builds composite electrical-coupling weights from branch admittances and DC
power-flow sensitivities, forms the corresponding modularity matrix, and
searches for the best k-way bus partition with interchangeable solvers:
simulated annealing on a QUBO or on a categorical model, an exhaustive
oracle, and a Louvain baseline.
"""
from .errors import (CaseFileError, DegenerateGraphError, GridCommunityError,
                     InstanceTooLargeError, SingularSystemError, SolverError,
                     ValidationError)
from .grid import Branch, Bus, Grid, build_grid, load_grid, validate
from .weights import (EcsAdjacency, PtdfMatrix, admittance_weights, build_ecs,
                      compute_ptdf, line_sensitivity_weights,
                      normalized_weights)
from .modularity import (ModularityMatrix, Partition, build_modularity_matrix,
                         louvain, score_partition)
from .qubo import (DiscreteModel, InfeasibilityReport, QuboModel, Sample,
                   SampleSet, VariableIndex, auto_penalty, build_discrete,
                   build_qubo, decode, energy, export_qubo_text, repair)
from .solvers import (SOLVERS, AnnealParams, SweepRecord, SweepResult,
                      anneal_discrete, anneal_qubo, exhaustive_search,
                      solve_partition, sweep_k)
from .estimator import GridPartitioner

__version__ = "0.1.0"

__all__ = [
    "AnnealParams", "Branch", "Bus", "CaseFileError", "DegenerateGraphError",
    "DiscreteModel", "EcsAdjacency", "Grid", "GridCommunityError",
    "GridPartitioner", "InfeasibilityReport", "InstanceTooLargeError",
    "ModularityMatrix", "Partition", "PtdfMatrix", "QuboModel", "SOLVERS",
    "Sample", "SampleSet", "SingularSystemError", "SolverError", "SweepRecord",
    "SweepResult", "ValidationError", "VariableIndex", "admittance_weights",
    "anneal_discrete", "anneal_qubo", "auto_penalty", "build_discrete",
    "build_ecs", "build_grid", "build_modularity_matrix", "build_qubo",
    "compute_ptdf", "decode", "energy", "exhaustive_search",
    "export_qubo_text", "line_sensitivity_weights", "load_grid", "louvain",
    "normalized_weights", "repair", "score_partition", "solve_partition",
    "sweep_k", "validate",
]

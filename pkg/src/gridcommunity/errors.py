"""Exception hierarchy for gridcommunity.

The CLI maps these onto exit codes: input problems (parsing, validation)
exit with 1, solver failures with 2.
"""


class GridCommunityError(Exception):
    """Base class for all errors raised by this package."""


class CaseFileError(GridCommunityError):
    """A case file is missing, unreadable, or does not match the schema."""


class ValidationError(GridCommunityError):
    """A grid violates a structural invariant (connectivity, slack, ...)."""


class DegenerateGraphError(GridCommunityError):
    """The weighted graph has zero total weight; modularity is undefined."""


class SingularSystemError(GridCommunityError):
    """The reduced susceptance matrix is singular (numerically disconnected)."""


class SolverError(GridCommunityError):
    """A solver could not produce a result."""


class InstanceTooLargeError(SolverError):
    """The instance exceeds the exhaustive solver's enumeration cap."""

"""Exception types raised across the package."""


class RaagsplitError(Exception):
    """Base class for all errors raised by raagsplit."""


class InvalidVertexError(RaagsplitError, ValueError):
    """A vertex index or label does not belong to the graph."""


class InvalidRankError(RaagsplitError, ValueError):
    """A requested rank is negative or below the size of a given clique."""


class InvalidArgumentError(RaagsplitError, ValueError):
    """An argument violates a documented precondition."""


class NotACliqueError(InvalidArgumentError):
    """A vertex set required to be a clique is not one."""


class NotSeparatingCliqueError(InvalidArgumentError):
    """A vertex set required to be a separating clique is not one."""


class StarCoversGraphError(InvalidArgumentError):
    """The star of the chosen vertex is the whole graph, so no splitting
    along it exists."""


class DisconnectedGraphError(InvalidArgumentError):
    """The operation supports only connected non-empty graphs."""


class InvalidCcdError(InvalidArgumentError):
    """A complete cut decomposition is structurally malformed or fails
    validation where validity is required."""


class InvalidAmalgamError(InvalidArgumentError):
    """An amalgam datum is structurally malformed."""


class InvalidScenarioError(InvalidArgumentError):
    """A lattice scenario violates its invariants."""


class ScenarioTooLargeError(InvalidScenarioError):
    """A lattice scenario exceeds the resource bounds."""


class GraphParseError(RaagsplitError, ValueError):
    """A graph document failed to parse.  Carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class InternalInvariantError(RaagsplitError, RuntimeError):
    """An invariant the implementation relies on failed; indicates a bug."""

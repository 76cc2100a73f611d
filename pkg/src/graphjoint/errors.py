"""Exception types shared across the package."""


class GraphJointError(Exception):
    """Base class for all graphjoint errors."""


class ParameterError(GraphJointError, ValueError):
    """An argument violates its contract (range, shape, positivity)."""


class PartitionError(GraphJointError, ValueError):
    """Observed/hidden node partition is inconsistent with the graph."""


class DimensionError(GraphJointError, ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class ModelError(GraphJointError, ValueError):
    """Input violates a model assumption (e.g. covariance not PSD)."""


class NumericalError(GraphJointError, ArithmeticError):
    """A numerical routine failed to produce a usable result."""


class MetricError(GraphJointError, ValueError):
    """The requested error metric is undefined for the given inputs."""


class PajekError(GraphJointError, ValueError):
    """Malformed Pajek input; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IngestError(GraphJointError, ValueError):
    """Parsed network data cannot be assembled into an ensemble."""

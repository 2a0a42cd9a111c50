"""Exception hierarchy shared by every girthpath module."""


class GirthPathError(Exception):
    """Base class for all girthpath errors."""


class ConfigError(GirthPathError):
    """Configuration value is malformed."""


class ParseError(GirthPathError, ValueError):
    """Instance file could not be parsed."""


class InvalidDigraphError(GirthPathError, ValueError):
    """A digraph violates its invariants or a vertex id is out of range."""


class PreconditionError(GirthPathError, ValueError):
    """An operation was called outside its precondition."""


class EmptyDigraphError(PreconditionError):
    """The operation is undefined on a digraph without vertices."""


class InsufficientOutDegreeError(PreconditionError):
    """Minimum out-degree is below the requested floor."""


class NotOrientedError(PreconditionError):
    """The digraph contains a 2-cycle."""


class PathExtendableError(PreconditionError):
    """The path endpoint has an out-neighbour off the path."""


class NoCycleError(PreconditionError):
    """The path endpoint has no out-neighbour, so no cycle closes."""


class NotRegularError(PreconditionError):
    """The digraph is not (C, d)-regular."""


class InvalidPartitionError(PreconditionError):
    """A part has no out-neighbour of the previous segment's endpoint."""


class ResourceLimitError(GirthPathError):
    """An exact computation would exceed the configured limits."""


class InstanceTooLargeError(ResourceLimitError):
    """Vertex count exceeds the solver limit."""


class BudgetExceededError(ResourceLimitError):
    """Branch-and-bound exhausted its node budget."""


class GenerationError(GirthPathError):
    """A random generator failed after its bounded repair attempts."""


class ConvergenceError(GirthPathError):
    """Resampling did not converge within the round cap."""


class DichotomyError(GirthPathError):
    """The long-path/dense-subgraph analysis reached an impossible state."""

"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`HouseSubsidyError`, so callers (and the CLI) can tell domain failures
from programming errors.
"""


class HouseSubsidyError(Exception):
    """Base class for all domain errors."""


class ValidationError(HouseSubsidyError, ValueError):
    """Input data does not describe a valid instance, allocation or outcome."""


class NegativeUtility(ValidationError):
    pass


class AgentsExceedHouses(ValidationError):
    pass


class EmptyInstance(ValidationError):
    pass


class RaggedMatrix(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NegativeShift(ValidationError):
    pass


class NotEnvyFreeable(HouseSubsidyError):
    """The allocation admits no envy-eliminating subsidy vector."""


class SolverError(HouseSubsidyError):
    """A solver refused to run on the given instance."""


class NotSquare(SolverError):
    pass


class NotIdentical(SolverError):
    pass


class SurplusCapExceeded(SolverError):
    pass


class BudgetExceeded(SolverError):
    pass


class ReductionError(HouseSubsidyError):
    pass


class EmptyGraph(ReductionError, ValidationError):
    pass


class KTooLarge(ReductionError):
    pass


class NotACover(ReductionError):
    pass


class CoverTooLarge(ReductionError):
    pass

"""Exception types shared across the package."""


class BoxLabError(Exception):
    """Base class for all package-specific errors."""


class SpecValidationError(BoxLabError):
    """A box/table/propagator specification failed validation."""


class WidthMismatchError(BoxLabError):
    """Outcome width of a box does not match the consumer's register width."""


class EnergyBudgetError(BoxLabError):
    """The observer's energy budget cannot cover another observation."""


class StateAliasingError(BoxLabError):
    """A hidden state was logged emitting both bit values at one position,
    so the outcome map is not a function of hidden state at this granularity."""


class ConfigError(BoxLabError):
    """A scenario configuration was rejected.

    `code` distinguishes schema violations from scenario precondition
    failures so reports and the CLI can surface them separately.
    """

    def __init__(self, message: str, code: str = "schema_violation"):
        super().__init__(message)
        self.code = code

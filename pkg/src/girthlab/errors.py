"""Exception types shared across the package."""


class GirthlabError(Exception):
    """Base class for all package errors."""


class DomainError(GirthlabError, ValueError):
    """An argument lies outside an operation's domain."""


class ScxParseError(GirthlabError):
    """Malformed ``.scx`` input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BudgetExceeded(GirthlabError):
    """A search or sweep ran past its evaluation budget.

    ``lower_bound`` is a certified lower bound on the quantity being searched
    for (for girth searches: every set of size ``< lower_bound`` was excluded).
    """

    def __init__(self, message: str, lower_bound: int | None = None):
        self.lower_bound = lower_bound
        super().__init__(message)

    @property
    def excluded_size(self) -> int | None:
        return None if self.lower_bound is None else self.lower_bound - 1


class ConvergenceError(GirthlabError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")


class VerificationError(GirthlabError):
    """A property that must hold did not (indicates a bug or a bad input)."""


class CertificationError(VerificationError):
    """A generated complex failed its girth certification."""

"""Exception hierarchy shared by the solver, the model builders and the CLI."""

from typing import Optional


class SpacingError(Exception):
    """Root of every error raised by this package."""


class DomainError(SpacingError):
    """A domain could not be built (empty or negative value ids)."""


class TrailError(SpacingError):
    """Checkpoint marks were not used last-in first-out."""


class SpecError(SpacingError):
    """Constraint parameters are inconsistent."""


class OversizeError(SpacingError):
    """An exhaustive enumeration or automaton would exceed its configured cap."""


class GenerationError(SpacingError):
    """The instance generator cannot derive valid voice parameters."""


class InstanceFormatError(SpacingError):
    """An instance file does not follow the JSON instance format."""


class DecodeError(SpacingError):
    """An assignment does not fit the model it is decoded against."""


class ReductionError(SpacingError):
    """A SAT reduction rejected its input or a support broke the construction."""


class UsageError(SpacingError):
    """Command-line misuse."""


class DimacsError(SpacingError):
    """Malformed DIMACS input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

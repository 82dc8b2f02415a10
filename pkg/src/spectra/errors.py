"""Exception hierarchy.

Two broad categories drive the CLI exit codes: malformed input
(:class:`ValidationError`, exit code 2) and violated numeric preconditions
(:class:`NumericPreconditionError`, exit code 3). OS-level I/O failures are
left as the builtin :class:`OSError` and mapped to exit code 4 by the CLI.
"""
from __future__ import annotations


class SpectraError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ValidationError(SpectraError):
    """Structurally or semantically invalid input."""

    exit_code = 2


class NumericPreconditionError(SpectraError):
    """An operation's numeric precondition does not hold for these values."""

    exit_code = 3


class EmptyInputError(ValidationError):
    """A non-empty sequence of values was required."""


class NonPositiveResolutionError(ValidationError):
    """Spectrum resolution must be a finite value > 0."""


class NegativeMagnitudeError(ValidationError):
    """A magnitude is not a finite non-negative real."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(
            f"magnitude at index {index} must be a finite non-negative real, got {value!r}"
        )


class EmptyListError(ValidationError):
    """A non-empty list of spectra was required."""


class NotCongruentError(ValidationError):
    """Operands do not share resolution and line count."""

    def __init__(self, first: object, second: object, detail: str):
        self.first = first
        self.second = second
        super().__init__(f"spectra {first!r} and {second!r} are not congruent: {detail}")


class TooFewSamplesError(ValidationError):
    """At least 2 samples are needed to form a spectrum."""


class MalformedCsvError(ValidationError):
    """A CSV row or header could not be parsed."""

    def __init__(self, path: object, line_number: int, detail: str):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}: line {line_number}: {detail}")


class MissingHeaderError(ValidationError):
    """A required CSV header is absent."""


class LengthMismatchError(ValidationError):
    """Declared and actual element counts disagree."""

    def __init__(self, expected: int, actual: int, detail: str = ""):
        self.expected = expected
        self.actual = actual
        msg = f"expected {expected} values, got {actual}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class ScenarioError(ValidationError):
    """A scenario definition is invalid."""


class MagnitudeBelowFloorError(NumericPreconditionError):
    """Inversion requires every magnitude to stay above the floor."""

    def __init__(self, index: int, value: float, floor: float):
        self.index = index
        self.value = value
        self.floor = floor
        super().__init__(
            f"magnitude {value!r} at index {index} is below the inversion floor {floor!r}"
        )


class DivisionByNearZeroError(NumericPreconditionError):
    """Plain division hit a denominator too close to zero."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(
            f"denominator magnitude at index {index} is too close to zero for plain "
            f"division; use a conditioned division policy"
        )


class AllNearZeroError(NumericPreconditionError):
    """Normalization requires at least one magnitude well above zero."""

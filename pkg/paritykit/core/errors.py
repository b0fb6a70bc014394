"""
ParityKit Errors
================

Exception hierarchy shared across the package. Every error derives from
ParityKitError and from the closest builtin so callers can catch either.
"""


class ParityKitError(Exception):
    pass


class DimensionMismatchError(ParityKitError, ValueError):
    pass


class CountOverflowError(ParityKitError, OverflowError):
    pass


class NegativeCountError(ParityKitError, ValueError):
    pass


class UnknownGeneratorError(ParityKitError, LookupError):
    pass


class StructureError(ParityKitError, ValueError):
    """Face data refers to generators that do not exist, or is graded wrongly."""


class NotWellFormedError(ParityKitError, ValueError):
    pass


class CellShapeError(ParityKitError, ValueError):
    pass


class InvalidCellError(ParityKitError, ValueError):
    """A well-shaped table whose columns fail the cell conditions."""


class NotComposableError(ParityKitError, ValueError):
    pass


class MissingAugmentationError(ParityKitError, ValueError):
    pass


class NotWeaklyLoopFreeError(ParityKitError, ValueError):
    pass


class EnumerationLimitError(ParityKitError, RuntimeError):
    pass


class InternalConsistencyError(ParityKitError, RuntimeError):
    """A property guaranteed by the theory failed; indicates a bug or invalid input."""


class MorphismModeError(ParityKitError, ValueError):
    pass


class InvalidMorphismError(ParityKitError, ValueError):
    pass


class BoundExceededError(ParityKitError, ValueError):
    pass


class FixtureError(ParityKitError, ValueError):
    pass

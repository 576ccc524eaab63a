"""Exception types shared across the package."""


class InexactDivisionError(ArithmeticError):
    """An exact integer division left a remainder.

    Every division in this package is mathematically exact; a remainder
    means corrupted state or an arithmetic bug, never a recoverable
    condition.
    """


class NonPositiveCellError(ArithmeticError):
    """A grid cell came out zero or negative where positivity is guaranteed."""


class CheckpointFormatError(ValueError):
    """A checkpoint file failed validation; the message names the line."""


class CheckpointMismatchError(ValueError):
    """A checkpoint belongs to a different run than the one requested."""


class BudgetExceededError(RuntimeError):
    """An enumeration was refused because its predicted size exceeds the budget."""

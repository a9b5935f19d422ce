"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (e.g. n < 2)."""


class RangeOverflowError(ArithmeticError):
    """A computation would leave the supported 64-bit integer range.

    Raised instead of silently wrapping or promoting; orbit and census code
    treats this as an abort of the offending start.
    """


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. a claimed cycle is not closed)."""


class NonterminationError(RuntimeError):
    """An orbit exceeded its step budget without entering a cycle."""

    def __init__(self, start, shift_a, max_steps):
        super().__init__(
            f"orbit of {start} under shift a={shift_a} did not cycle "
            f"within {max_steps} steps"
        )
        self.start = start
        self.shift_a = shift_a
        self.max_steps = max_steps

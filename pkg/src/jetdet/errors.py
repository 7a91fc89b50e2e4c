"""Exception types shared across the package."""


class UsageError(ValueError):
    """Invalid arguments or mismatched operands."""


class CapExceeded(RuntimeError):
    """A configured resource cap stopped a computation.

    ``partial`` carries whatever state had been reached when the cap was hit,
    so callers can report it instead of losing the work.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial

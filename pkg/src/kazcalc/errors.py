class KazcalcError(Exception):
    pass


class UsageError(KazcalcError, ValueError):
    """Bad arguments or a violated precondition."""


class TruncationMismatch(UsageError):
    pass


class TruncationTooSmall(UsageError):
    def __init__(self, requested, needed):
        self.requested = requested
        self.needed = needed
        super().__init__(
            f"truncation N={requested} is too small; need at least N={needed}"
        )


class CancellationMismatch(KazcalcError, RuntimeError):
    """A d1 cancellation whose image series does not equal its target."""

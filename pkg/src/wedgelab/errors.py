"""Exception types shared across the package."""


class InvariantViolation(RuntimeError):
    """An identity guaranteed by the theory failed: this signals an arithmetic bug."""

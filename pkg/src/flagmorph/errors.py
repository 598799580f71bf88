class DomainError(ValueError):
    """Input is well-formed but outside the hypotheses an operation accepts."""


class WeightMismatchError(DomainError):
    pass


class NotBlockSymmetricError(DomainError):
    pass


class SearchSpaceTooLarge(DomainError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"search space has {size} candidate tuples, above the cap of {cap}")
        self.size = size
        self.cap = cap


class HypothesisViolation(DomainError):
    pass


class PositivityViolation(AssertionError):
    """Raised when a complete homogeneous value of even degree is negative,
    or vanishes at a nonzero point. Either would contradict the positivity result,
    so it is treated as a hard failure rather than a domain rejection."""

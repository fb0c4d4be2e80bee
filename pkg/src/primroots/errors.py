"""Exception types raised by the toolkit."""


class PrimRootsError(Exception):
    """Base class for every error raised by this package."""


class SearchCapExceeded(PrimRootsError):
    """A search for a prime primitive root ran past its configured cap."""


class NumericalDrift(PrimRootsError, ArithmeticError):
    """A floating-point character sum strayed from its exact value."""


class DecompositionMismatch(PrimRootsError, ArithmeticError):
    """Direct and character-decomposed partial sums disagree."""


class BudgetExceeded(PrimRootsError, ValueError):
    """A requested range exceeds the configured memory or compute budget."""

"""Exception types raised by the library."""


class Ulat36Error(Exception):
    """Base class for all library errors."""


class CardinalityTooLarge(Ulat36Error):
    """Code enumeration refused because |C| exceeds the guard."""


class NonIntegerResult(Ulat36Error):
    """A transform that must produce integers produced a fraction."""


class TorsionMismatch(Ulat36Error):
    """Torsion code of a self-dual Z4 code is not the dual of the residue."""


class NoSolution(Ulat36Error):
    """A constrained solve has no solution."""


class NonUnique(Ulat36Error):
    """A constrained solve has more than one solution."""

    def __init__(self, message, dimension=None):
        super().__init__(message)
        self.dimension = dimension


class SolveFailed(Ulat36Error):
    """A linear system that should be consistent was not."""


class NotSelfDual(Ulat36Error):
    """Input code is not self-dual."""


class NotDoublyEven(Ulat36Error):
    """Binary residue code is not doubly even."""


class CompletionFailed(Ulat36Error):
    """Self-dual completion of a Z4 seed failed."""


class UnknownName(Ulat36Error):
    """Dataset identifier is not known."""


class NotOdd(Ulat36Error):
    """Lattice has no vector of odd norm."""


class DimensionNotDivisibleBy4(Ulat36Error):
    """Neighbor construction needs dimension divisible by 4."""


class BudgetExceeded(Ulat36Error):
    """Enumeration tree exceeded the node budget."""

    def __init__(self, message, nodes=None, budget=None):
        super().__init__(message)
        self.nodes = nodes
        self.budget = budget


class AlphaOutOfRange(Ulat36Error):
    """Shadow parameter outside its admissible range."""


class ConstraintViolated(Ulat36Error):
    """Theta-series parameters violate their constraint."""

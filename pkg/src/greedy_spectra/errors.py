"""Exception types shared across the package."""


class GreedySpectraError(Exception):
    """Base class for every error this package raises on purpose."""


class NotRealizableError(GreedySpectraError, ValueError):
    """No tree (or rooted forest) realizes the given sequence."""


class LengthMismatchError(GreedySpectraError, ValueError):
    """Two sequences that must have equal length do not."""


class InvalidBoundsError(GreedySpectraError, ValueError):
    """A numeric parameter lies outside its admissible range."""


class RootNotInTreeError(GreedySpectraError, ValueError):
    """The requested root vertex is not a vertex of the tree."""


class NotAnEdgeError(GreedySpectraError, ValueError):
    """The requested vertex pair is not an edge of the tree."""


class LevelMismatchError(GreedySpectraError, ValueError):
    """A level-sequence constraint (first = last, unit steps) is violated."""


class InvalidMoveError(GreedySpectraError, ValueError):
    """A branch move violates its level/position preconditions."""


class AlreadyEqualError(GreedySpectraError, ValueError):
    """A strict transformation step was requested between equal sequences."""


class NotMajorizedError(GreedySpectraError, ValueError):
    """The required majorization relation between two sequences fails."""


class NonConvergenceError(GreedySpectraError, RuntimeError):
    """An iterative numerical method hit its iteration cap."""


class MethodDisagreementError(GreedySpectraError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class CapExceededError(GreedySpectraError, RuntimeError):
    """An enumeration request exceeds the configured size cap."""

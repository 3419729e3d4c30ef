"""Exception types shared across the package."""


class GitDescentError(Exception):
    """Base class for every error raised by this package."""


class InvalidType(GitDescentError):
    """Not an admissible simple type (family, rank)."""


class DimensionMismatch(GitDescentError):
    """Vector or lattice dimensions do not agree."""


class NotInRootLattice(GitDescentError):
    """Weight-coordinate vector is not an integer combination of simple roots."""


class NotARoot(GitDescentError):
    """Root-coordinate vector is not a root of the given system."""


class IndexOutOfRange(GitDescentError):
    """Simple-reflection index outside 1..rank."""


class NotASublattice(GitDescentError):
    """Claimed sublattice is not contained in the claimed overlattice."""


class RankOutOfTableRange(GitDescentError):
    """No tabulated descent lattice exists for this type at this rank."""


class NotDominant(GitDescentError):
    """Weight has a negative fundamental coordinate."""


class NotDominantRegular(GitDescentError):
    """Weight has a fundamental coordinate below 1."""


class GroupTooLarge(GitDescentError):
    """An exhaustive enumeration would exceed the configured size bound.

    Carries the size that tripped the bound so callers can report it.
    """

    def __init__(self, order, bound=None):
        self.order = order
        self.bound = bound
        if bound is None:
            super().__init__(f"enumeration of size {order} refused")
        else:
            super().__init__(f"enumeration of size {order} exceeds bound {bound}")


class WorkBoundExceeded(GitDescentError):
    """A multiplicity computation grew past its work bound.

    ``at_scale`` records the scaling factor N at which the bound tripped,
    when the failure happened inside a scaled-triple probe.
    """

    def __init__(self, message, at_scale=None):
        self.at_scale = at_scale
        super().__init__(message)


#: Errors that signal a refused resource bound rather than bad input.
RESOURCE_ERRORS = (GroupTooLarge, WorkBoundExceeded)

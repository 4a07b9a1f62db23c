"""Exception hierarchy shared by all schubmat modules."""


class SchubmatError(Exception):
    """Base class for all domain errors raised by this package."""


# partition / ambient errors

class DoesNotFit(SchubmatError):
    """A partition does not fit inside the given rectangle."""


class InvalidDimensions(SchubmatError):
    """Rank/ground-set dimensions outside the valid range."""


class AmbientMismatch(SchubmatError):
    """Two Chow classes (or a class and a target) live in incompatible ambients."""


# matroid construction errors

class EmptyBases(SchubmatError):
    """A matroid must have at least one basis."""


class WrongBasisSize(SchubmatError):
    """A listed basis does not have exactly r elements."""


class ElementOutOfRange(SchubmatError):
    """A basis element lies outside the ground set [n]."""


class ExchangeAxiomViolated(SchubmatError):
    """The basis-exchange axiom fails; carries a witness pair."""

    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"no exchange for x={x} between bases {sorted(b1)} and {sorted(b2)}"
        )


class BadStepString(SchubmatError):
    """Lattice path string is not over {N,E} or has inconsistent counts."""


class PathsCross(SchubmatError):
    """Upper lattice path dips below the lower one."""


class RankDeficient(SchubmatError):
    """A realization matrix has rank smaller than the requested rank."""


class OverlappingSets(SchubmatError):
    """Deletion and contraction sets overlap."""


class DependentContraction(SchubmatError):
    """The contraction set is dependent."""


# orbit-class errors

class NotSparsePaving(SchubmatError):
    """Input matroid is not sparse paving."""


class NotConnected(SchubmatError):
    """Input matroid is not connected."""


class UnsupportedMatroid(SchubmatError):
    """A connected component is neither sparse paving nor minimal.

    No formula is implemented for such matroids; carries the offending
    component so callers can inspect it.
    """

    def __init__(self, component, message="no formula for this connected component"):
        self.component = component
        super().__init__(message)


# polytope errors

class DeskScaleExceeded(SchubmatError):
    """Ground set too large for the enumeration-based volume oracle."""


class NonIntegralVolume(SchubmatError):
    """Internal consistency failure in the Ehrhart interpolation."""

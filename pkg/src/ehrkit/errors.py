"""Exception hierarchy shared by all modules."""


class EhrkitError(Exception):
    """Base class for every error raised by this library."""


# -- geometry -----------------------------------------------------------------

class EmptyInput(EhrkitError):
    """No points were supplied."""


class MixedDimensions(EhrkitError):
    """Points (or a query point) of inconsistent ambient dimension."""


class NotFullDimensional(EhrkitError):
    """Operation requires dim == ambient_dim."""


class NonpositiveScale(EhrkitError):
    """Dilation factor must be positive."""


class OriginNotInterior(EhrkitError):
    """Operation requires the origin strictly inside the polytope."""


class NoLatticePoints(EhrkitError):
    """The affine hull contains no lattice points, so no unimodular chart exists."""


# -- triangulation ------------------------------------------------------------

class NotGeneric(EhrkitError):
    """The chosen point lies on a facet hyperplane of some cell."""


class ExhaustedRetries(EhrkitError):
    """No generic point found within the retry budget."""


class AffinelyDependent(EhrkitError):
    """Apex lies in the affine span of the simplex."""


class BoundExceeded(EhrkitError):
    """A search ran past its provable bound (internal bug, not a legal outcome)."""


class NotLatticePolytope(EhrkitError):
    """Operation is defined for lattice polytopes only."""


class DimensionZero(EhrkitError):
    """Boundary operations need dimension at least one."""


# -- enumeration kernels ------------------------------------------------------

class NonIntegralGenerator(EhrkitError):
    """heights[j] * vertex[j] is not an integer vector."""


class BoxTooLarge(EhrkitError):
    """Brute-force scan would exceed the candidate-point guard."""


class TailNonzero(EhrkitError):
    """Series times denominator has nonzero tail terms (internal inconsistency)."""


# -- decomposition ------------------------------------------------------------

class NotDivisible(EhrkitError):
    """Polynomial is not divisible by 1 + z + ... + z^(q-1)."""


class NoSolution(EhrkitError):
    """The palindromic decomposition system has no solution (bug signal)."""


class ApexInSpan(EhrkitError):
    """Pyramid apex must leave the base's affine span."""


# -- classification / rational series ----------------------------------------

class IdentityViolated(EhrkitError):
    """A classification identity that is a theorem failed to hold (bug signal)."""


class InvalidM(EhrkitError):
    """m does not make the scaled polytope a lattice polytope."""

"""Exception hierarchy for the spherepairs package."""


class SpherePairsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(SpherePairsError):
    """Malformed or out-of-contract input (shape, sign, dimension mismatch)."""


class DegenerateSubspace(SpherePairsError):
    """An operation that needs a non-degenerate subspace got a degenerate one."""


class PointsNotInGeneralPosition(InvalidInput):
    """The given points lie on a sphere of lower dimension than requested."""


class NotGeneralPosition(SpherePairsError):
    """The sphere pair is contained in a common hypersphere; reduce it first."""


class EqualSpheres(SpherePairsError):
    """Both spheres of a pair are the same sphere."""


class InconsistentClassification(SpherePairsError):
    """Spectral and inertia-based classifications disagree (tolerance breakdown)."""


class FrameConstructionFailed(SpherePairsError):
    """Adapted frames could not be built within tolerance (near-degenerate pair)."""


class IncomparablePairs(SpherePairsError):
    """The two pairs live in Moebius spaces of different dimension."""


class WitnessFailed(SpherePairsError):
    """A transformation witness failed its verification postcondition."""


class InternalError(SpherePairsError):
    """A condition the theory excludes was observed; indicates numerical breakdown."""

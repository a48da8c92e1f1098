"""Exception hierarchy shared by all prymvar modules."""


class PrymvarError(Exception):
    """Base class for all workbench errors."""


# -- algebra ----------------------------------------------------------------

class NonConvergence(PrymvarError):
    """Root iteration failed for some cluster (ill-conditioned input)."""


class SingularSystem(PrymvarError):
    """Linear system is rank deficient."""


# -- cover ------------------------------------------------------------------

class NonGenericDivisor(PrymvarError):
    """Multiple zero, or a zero landing on a pole."""


class OddPoleOrder(PrymvarError):
    """Pole orders of the quadratic differential must be even."""


class DegenerateCover(PrymvarError):
    """No branch points: the double cover is unramified."""


class EvaluationAtSingularity(PrymvarError):
    """Point evaluation requested at a branch point or pole."""


class PathTooCloseToBranchPoint(PrymvarError):
    """Sheet continuation path violates its declared clearance."""


class FrameRadiusTooSmall(PrymvarError):
    """Another singularity sits inside the local frame's sampling circle."""


# -- homology ---------------------------------------------------------------

class CutCrossing(PrymvarError):
    """Angular-sweep pairing produced crossing branch cuts."""


class TangentialCrossing(PrymvarError):
    """A cycle crossing is too close to tangency to sign reliably."""


class PathConstructionError(PrymvarError):
    """Could not route a path with the required clearance."""


# -- quadrature -------------------------------------------------------------

class NoConvergence(PrymvarError):
    """Adaptive refinement stalled before reaching the tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ClearanceViolation(PrymvarError):
    """Integration path passes too close to a singularity of the form."""


class ContourCollision(PrymvarError):
    """Extraction circle would hit another singularity."""


class DivergentEndpoint(PrymvarError):
    """Path integral endpoint sits on a non-integrable singularity."""


# -- differentials ----------------------------------------------------------

class GenusZeroCover(PrymvarError):
    """The cover has genus zero; there are no holomorphic differentials."""


class SingularPeriodMatrix(PrymvarError):
    """Raw period matrix over the a-cycles is numerically singular."""


class MatchingSystemSingular(PrymvarError):
    """Principal-part matching system is singular."""


# -- bergman ----------------------------------------------------------------

class ConstraintSystemSingular(PrymvarError):
    """Kernel constraint system is underdetermined or inconsistent."""


class DiagonalEvaluation(PrymvarError):
    """Two-point kernel evaluated at coincident points."""


class ExtrapolationDivergence(PrymvarError):
    """Richardson extrapolation of a diagonal limit failed to settle."""


# -- moduli -----------------------------------------------------------------

class NewtonDivergence(PrymvarError):
    """Newton inversion of the coordinate map failed."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BasisJump(PrymvarError):
    """A branch point crossed a cut during deformation; step must shrink."""


class MissingDoublePole(PrymvarError):
    """Direction refers to a double-pole residue the cover does not have."""


# -- verify -----------------------------------------------------------------

class SpecParseError(PrymvarError):
    """Scenario file does not parse or validate."""


class UnknownCheck(PrymvarError):
    """Scenario requests a check id that is not registered."""

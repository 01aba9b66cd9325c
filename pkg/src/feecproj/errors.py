"""Exception types raised across the library."""


class FeecProjError(Exception):
    """Base class for all library errors."""


# -- meshes -------------------------------------------------------------

class NonConformingMesh(FeecProjError):
    """Two cells intersect in a set that is not a common face."""


class DegenerateCell(FeecProjError):
    """A cell has (numerically) zero volume or repeated vertices."""


class NotFound(FeecProjError):
    """Point location failed: the point is outside the mesh."""


class GeometryMismatch(FeecProjError):
    """Mesh and domain geometry do not describe the same set."""


# -- quadrature ---------------------------------------------------------

class UnsupportedDegree(FeecProjError):
    """Requested quadrature degree or dimension is out of range."""


# -- differential forms -------------------------------------------------

class DimensionMismatch(FeecProjError):
    """Operands live in different ambient dimensions."""


class ZeroFormContraction(FeecProjError):
    """Vector contraction applied to a 0-form."""


# -- finite element spaces ----------------------------------------------

class UnisolvenceFailure(FeecProjError):
    """Degrees of freedom do not determine the local space uniquely."""


class NonIntegrableTrace(FeecProjError):
    """A form cannot be evaluated on a degree-of-freedom face."""


# -- domain geometry ----------------------------------------------------

class NotStarShaped(FeecProjError):
    """Gauge failed the homogeneity / boundary-normalization checks."""


class CollarTooWide(FeecProjError):
    """Requested collar width leaves the valid chart region."""


class EvaluationOutsideExtendedDomain(FeecProjError):
    """A point is outside the extended domain of an extension operator."""


class RadiusTooLarge(FeecProjError):
    """Smoothing radius violates the admissibility constraint."""


# -- projection ---------------------------------------------------------

class EmptyAdmissibleRange(FeecProjError):
    """Measured constants admit no positive mollification parameter."""


class NeumannDivergence(FeecProjError):
    """The smoothed interpolator is not invertible on the FE space."""


class SingularDOF(FeecProjError):
    """A degree-of-freedom integral evaluated to a non-finite value."""

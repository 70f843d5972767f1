"""Exception hierarchy shared across the package."""


class GrassopError(Exception):
    """Base class for every error raised by grassop."""


class InvalidInput(GrassopError):
    """Malformed data: non-finite entries, wrong shapes, bad tolerances."""


class DimensionMismatch(GrassopError):
    """Ambient dimensions or subspace dimensions do not agree."""


class NotContained(GrassopError):
    """A subspace that must lie inside another one does not."""


class DegenerateClass(GrassopError):
    """Signature describes a single-operator class (one eigenvalue only)."""


class NonOrthogonalEigenspaces(GrassopError):
    """Eigenspace frames are not mutually orthogonal within tolerance."""


class NotHermitian(GrassopError):
    """Matrix is not Hermitian within tolerance."""


class SpectrumMismatch(GrassopError):
    """Eigenvalues of a matrix cannot be clustered onto the given signature."""


class NotInSd(GrassopError):
    """Permutation does not preserve eigenspace multiplicities."""


class TooManyEigenvalues(GrassopError):
    """Explicit group enumeration refused beyond the supported size."""


class ClassMismatch(GrassopError):
    """Operators do not belong to the same conjugacy class."""


class PreconditionViolated(GrassopError):
    """Operation invoked on inputs outside its stated precondition."""


class InternalInconsistency(GrassopError):
    """Two independent computations disagree; signals a tolerance failure."""


class BadIndices(GrassopError):
    """Eigenvalue indices are out of range or not distinct."""


class DegenerateInput(GrassopError):
    """Construction cannot proceed on this input (collapsed geometry)."""


class NotIJConnected(GrassopError):
    """Operators differ at an eigenspace outside the selected index pair."""


class SignatureMismatch(GrassopError):
    """Operator signature differs from the one the operation requires."""


class NotMutuallyAdjacent(GrassopError):
    """Given operators are not pairwise adjacent."""


class NotAClique(GrassopError):
    """Given operators do not form a clique of a single adjacency type."""


class AmbiguousOrientation(GrassopError):
    """Star/top orientation cannot be decided for the given input."""


class NotAdjacent(GrassopError):
    """Operation requires an adjacent pair of operators."""


class MultiplicityTooSmall(GrassopError):
    """Line/clique structure requires both multiplicities above one."""


class DifferentComponents(GrassopError):
    """Descriptors do not live in the same connected component."""


class NotUnitary(GrassopError):
    """Matrix is not unitary within tolerance."""


class RequiresKEquals2(GrassopError):
    """Operation is only defined for two-eigenvalue classes."""


class ParseError(GrassopError):
    """Serialized document cannot be parsed."""


class ValidationError(GrassopError):
    """Serialized document parses but violates an invariant."""

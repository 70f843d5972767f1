"""Conjugacy classes of finite-rank Hermitian operators.

A class is named by a signature: distinct real eigenvalues paired
positionally with positive multiplicities summing to the ambient
dimension.  An operator is a signature together with one orthonormal
eigenspace frame per eigenvalue; its matrix is the weighted sum of the
eigenspace projectors.

Indices are 0-based throughout: the pair ``(0, 1)`` refers to the first
two eigenvalues of a signature.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ClassMismatch,
    DegenerateClass,
    DimensionMismatch,
    InvalidInput,
    NonOrthogonalEigenspaces,
    NotHermitian,
    NotInSd,
    SpectrumMismatch,
    TooManyEigenvalues,
)
from .subspaces import DEFAULT_TOL, Subspace, Tolerance, same_subspace, zero_subspace

__all__ = [
    "MIN_EIGENVALUE_GAP",
    "ClassSignature",
    "Permutation",
    "SpectralOperator",
    "make_operator",
    "to_matrix",
    "from_matrix",
    "same_class",
    "align_to",
    "operators_equal",
    "sd_group",
    "apply_permutation",
    "random_operator",
    "operator_image",
]

# Smallest admissible gap between distinct eigenvalues of one signature.
MIN_EIGENVALUE_GAP = 1e-6

# Relative Hermitian-deviation bound accepted by from_matrix.
HERMITIAN_REL = 1e-10

# Explicit enumeration bound for the multiplicity-preserving group.
MAX_GROUP_EIGENVALUES = 8


@dataclass(frozen=True)
class ClassSignature:
    """Spectral data naming one conjugacy class.

    ``eigenvalues[i]`` carries multiplicity ``multiplicities[i]``; the
    pairing is positional and part of the identity of the signature.
    Classes with a single eigenvalue contain exactly one operator and are
    rejected.
    """

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    ambient_dim: int

    def __post_init__(self):
        eig = tuple(float(a) for a in self.eigenvalues)
        mult = tuple(int(n) for n in self.multiplicities)
        object.__setattr__(self, "eigenvalues", eig)
        object.__setattr__(self, "multiplicities", mult)
        if len(eig) != len(mult):
            raise InvalidInput("eigenvalues and multiplicities differ in length")
        if len(eig) < 2:
            raise DegenerateClass("a single-eigenvalue class holds one operator only")
        if not all(np.isfinite(eig)):
            raise InvalidInput("eigenvalues must be finite")
        if any(n < 1 for n in mult):
            raise InvalidInput("multiplicities must be positive")
        if sum(mult) != self.ambient_dim:
            raise InvalidInput(
                f"multiplicities sum to {sum(mult)}, ambient dimension is {self.ambient_dim}"
            )
        gaps = [abs(a - b) for a, b in itertools.combinations(eig, 2)]
        if min(gaps) <= MIN_EIGENVALUE_GAP:
            raise InvalidInput(
                f"eigenvalues closer than {MIN_EIGENVALUE_GAP} cannot be told apart"
            )

    @property
    def k(self) -> int:
        return len(self.eigenvalues)

    def min_gap(self) -> float:
        return min(
            abs(a - b) for a, b in itertools.combinations(self.eigenvalues, 2)
        )

    def index_of(self, eigenvalue: float) -> int:
        """Position of an eigenvalue carried verbatim from this signature."""
        for t, a in enumerate(self.eigenvalues):
            if a == eigenvalue:
                return t
        raise InvalidInput(f"{eigenvalue} is not an eigenvalue of this signature")

    def canonical_order(self) -> tuple[int, ...]:
        """Index order used for serialization: descending multiplicity,
        then ascending eigenvalue."""
        return tuple(
            sorted(
                range(self.k),
                key=lambda t: (-self.multiplicities[t], self.eigenvalues[t]),
            )
        )

    def pair_set(self) -> frozenset[tuple[float, int]]:
        return frozenset(zip(self.eigenvalues, self.multiplicities))


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., k-1}``, stored as the image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInput(f"not a permutation of 0..{len(images) - 1}: {images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, t: int) -> int:
        return self.images[t]

    def is_identity(self) -> bool:
        return all(i == t for t, i in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for t, i in enumerate(self.images):
            inv[i] = t
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """Composite whose action on operators equals applying ``other``
        first and then ``self``."""
        if self.size != other.size:
            raise InvalidInput("permutation sizes differ")
        return Permutation(tuple(other.images[self.images[t]] for t in range(self.size)))

    def preserves_multiplicities(self, sig: ClassSignature) -> bool:
        d = sig.multiplicities
        return all(d[self.images[t]] == d[t] for t in range(self.size))

    @staticmethod
    def identity(size: int) -> "Permutation":
        return Permutation(tuple(range(size)))


@dataclass(frozen=True, eq=False)
class SpectralOperator:
    """An element of a conjugacy class: signature plus eigenspace frames."""

    signature: ClassSignature
    eigenspaces: tuple[Subspace, ...]

    @property
    def ambient_dim(self) -> int:
        return self.signature.ambient_dim

    @property
    def k(self) -> int:
        return self.signature.k

    @property
    def tol(self) -> Tolerance:
        return self.eigenspaces[0].tol

    @cached_property
    def matrix(self) -> np.ndarray:
        """Hermitian N x N matrix: weighted sum of eigenspace projectors."""
        M = np.zeros((self.ambient_dim, self.ambient_dim), dtype=complex)
        for a, space in zip(self.signature.eigenvalues, self.eigenspaces):
            M += a * space.projector()
        M = (M + M.conj().T) / 2
        M.setflags(write=False)
        return M

    def eigenspace_for(self, eigenvalue: float) -> Subspace:
        return self.eigenspaces[self.signature.index_of(eigenvalue)]

    def replace_eigenspaces(self, updates: dict[int, Subspace]) -> "SpectralOperator":
        """New operator in the same class with the given eigenspaces swapped in."""
        frames = list(self.eigenspaces)
        for t, space in updates.items():
            frames[t] = space
        return make_operator(self.signature, frames)

    def __repr__(self):
        sig = self.signature
        return (
            f"SpectralOperator(sigma={sig.eigenvalues}, d={sig.multiplicities}, "
            f"N={sig.ambient_dim})"
        )


def make_operator(sig: ClassSignature, frames) -> SpectralOperator:
    """Validated operator from a signature and one frame per eigenvalue.

    Enforces frame count, per-frame dimensions against the multiplicities,
    a shared ambient dimension, and mutual orthogonality of the frames.
    Completeness then follows from the signature invariant ``sum d == N``.
    """
    frames = tuple(frames)
    if len(frames) != sig.k:
        raise DimensionMismatch(f"expected {sig.k} eigenspaces, got {len(frames)}")
    tol = frames[0].tol
    for t, space in enumerate(frames):
        if space.ambient_dim != sig.ambient_dim:
            raise DimensionMismatch(
                f"eigenspace {t} lives in dimension {space.ambient_dim}, "
                f"signature says {sig.ambient_dim}"
            )
        if space.dim != sig.multiplicities[t]:
            raise DimensionMismatch(
                f"eigenspace {t} has dimension {space.dim}, "
                f"multiplicity is {sig.multiplicities[t]}"
            )
    for s, t in itertools.combinations(range(sig.k), 2):
        cross = frames[s].frame.conj().T @ frames[t].frame
        if cross.size and np.abs(cross).max() > 10 * tol.angle_abs:
            raise NonOrthogonalEigenspaces(
                f"eigenspaces {s} and {t} overlap (max cross product "
                f"{np.abs(cross).max():.2e})"
            )
    return SpectralOperator(sig, frames)


def to_matrix(op: SpectralOperator) -> np.ndarray:
    return op.matrix


def from_matrix(M, sig: ClassSignature, tol: Tolerance = DEFAULT_TOL) -> SpectralOperator:
    """Recover the operator from its matrix by eigenvalue clustering.

    Eigenvalues are assigned to the nearest signature value; the cluster
    radius is a quarter of the smallest signature gap, so legitimate
    clusters can never bleed into each other.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInput("expected a square matrix")
    if M.shape[0] != sig.ambient_dim:
        raise DimensionMismatch(
            f"matrix is {M.shape[0]} x {M.shape[0]}, signature ambient is {sig.ambient_dim}"
        )
    if not np.isfinite(M).all():
        raise InvalidInput("matrix has non-finite entries")
    scale = np.abs(M).max()
    if scale > 0 and np.abs(M - M.conj().T).max() > HERMITIAN_REL * scale:
        raise NotHermitian("matrix deviates from its conjugate transpose")
    w, V = np.linalg.eigh((M + M.conj().T) / 2)
    radius = sig.min_gap() / 4
    buckets: list[list[int]] = [[] for _ in range(sig.k)]
    for col, value in enumerate(w):
        dists = [abs(value - a) for a in sig.eigenvalues]
        best = int(np.argmin(dists))
        if dists[best] > radius:
            raise SpectrumMismatch(
                f"eigenvalue {value:.6g} is farther than {radius:.3g} from every "
                "signature value"
            )
        buckets[best].append(col)
    for t, bucket in enumerate(buckets):
        if len(bucket) != sig.multiplicities[t]:
            raise SpectrumMismatch(
                f"eigenvalue {sig.eigenvalues[t]} has cluster size {len(bucket)}, "
                f"multiplicity is {sig.multiplicities[t]}"
            )
    frames = tuple(Subspace(V[:, bucket], tol) for bucket in buckets)
    return make_operator(sig, frames)


def same_class(a: SpectralOperator, b: SpectralOperator) -> bool:
    """Membership of both operators in one conjugacy class: equal ambient
    dimension and equal sets of (eigenvalue, multiplicity) pairs."""
    return (
        a.ambient_dim == b.ambient_dim
        and a.signature.pair_set() == b.signature.pair_set()
    )


def align_to(reference: SpectralOperator, other: SpectralOperator) -> SpectralOperator:
    """Reindex ``other`` so its signature order matches ``reference``.

    Raises ClassMismatch when the two operators are not in one class.
    Positional index arithmetic (adjacency types, connectivity) is only
    meaningful after alignment.
    """
    if not same_class(reference, other):
        raise ClassMismatch(
            f"operators belong to different classes: {reference.signature} "
            f"vs {other.signature}"
        )
    if reference.signature == other.signature:
        return other
    order = [
        other.signature.index_of(a) for a in reference.signature.eigenvalues
    ]
    return SpectralOperator(
        reference.signature, tuple(other.eigenspaces[t] for t in order)
    )


def operators_equal(a: SpectralOperator, b: SpectralOperator) -> bool:
    """Equality as maps: same class and equal eigenspaces (principal angles)."""
    if not same_class(a, b):
        return False
    b = align_to(a, b)
    return all(
        same_subspace(x, y) for x, y in zip(a.eigenspaces, b.eigenspaces)
    )


def sd_group(sig: ClassSignature) -> list[Permutation]:
    """All permutations preserving the multiplicity of every eigenvalue,
    in lexicographic order.  Explicit enumeration; refuses k > 8."""
    if sig.k > MAX_GROUP_EIGENVALUES:
        raise TooManyEigenvalues(
            f"group enumeration supports k <= {MAX_GROUP_EIGENVALUES}, got {sig.k}"
        )
    d = sig.multiplicities
    out = []
    for images in itertools.permutations(range(sig.k)):
        if all(d[images[t]] == d[t] for t in range(sig.k)):
            out.append(Permutation(images))
    return out


def apply_permutation(perm: Permutation, op: SpectralOperator) -> SpectralOperator:
    """Operator whose eigenspace for the t-th eigenvalue is the old
    eigenspace at index ``perm(t)``.  Requires the permutation to preserve
    multiplicities."""
    if perm.size != op.k or not perm.preserves_multiplicities(op.signature):
        raise NotInSd(f"{perm.images} does not preserve multiplicities of {op.signature}")
    return SpectralOperator(
        op.signature, tuple(op.eigenspaces[perm.images[t]] for t in range(op.k))
    )


def random_operator(
    sig: ClassSignature, rng: np.random.Generator, tol: Tolerance = DEFAULT_TOL
) -> SpectralOperator:
    """Class member from a Haar-style random unitary frame.

    A standard complex Gaussian matrix is orthonormalized by QR with the
    usual phase fix, then split into eigenspace blocks.  Identical
    generator state gives a bit-identical operator.
    """
    n = sig.ambient_dim
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(G)
    diag = np.diagonal(R).copy()
    diag[diag == 0] = 1.0
    Q = Q * (diag / np.abs(diag))
    frames = []
    start = 0
    for m in sig.multiplicities:
        frames.append(Subspace(Q[:, start : start + m], tol))
        start += m
    return make_operator(sig, frames)


def operator_image(op: SpectralOperator) -> Subspace:
    """Span of the eigenspaces attached to nonzero eigenvalues.

    The kernel is the eigenspace whose eigenvalue is literally 0.0.
    """
    blocks = [
        space.frame
        for a, space in zip(op.signature.eigenvalues, op.eigenspaces)
        if a != 0.0
    ]
    if not blocks:
        return zero_subspace(op.ambient_dim, op.tol)
    return Subspace(np.hstack(blocks), op.tol)

"""The adjacency relation on a conjugacy class.

Two distinct class members are adjacent when their difference has rank
exactly two (condition ``a1``) and the image and kernel of the difference
are invariant under both operators (condition ``a2``).  Structurally this
is equivalent to: the eigenspaces for two eigenvalue indices are adjacent
as subspaces and all remaining eigenspaces coincide.

The predicate here is computed from matrices, the structural
classification from spectral data; keeping the two routes independent is
what makes :func:`adjacency_oracle` a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadIndices,
    DegenerateInput,
    DimensionMismatch,
    InternalInconsistency,
    InvalidInput,
    NotHermitian,
    PreconditionViolated,
)
from .operators import (
    ClassSignature,
    SpectralOperator,
    align_to,
    from_matrix,
    operator_image,
)
from .subspaces import (
    DEFAULT_TOL,
    Subspace,
    Tolerance,
    complement,
    contains,
    intersect,
    numerical_rank,
    orthonormalize,
    principal_angles,
    same_subspace,
    subspace_sum,
    subspaces_adjacent,
)

__all__ = [
    "INVARIANCE_REL",
    "AdjacencyVerdict",
    "condition_a1",
    "condition_a2",
    "is_adjacent",
    "classify_adjacency",
    "adjacency_oracle",
    "image_relation",
    "make_ij_adjacent",
    "pseudo_adjacent_c3",
    "pseudo_adjacent_general",
    "image_direct_sum_check",
]

# Relative spectral-norm threshold for the invariance test.
INVARIANCE_REL = 1e-8


@dataclass(frozen=True)
class AdjacencyVerdict:
    """Full outcome of the adjacency test.

    ``type_pair`` is present exactly when the pair is adjacent;
    ``image_of_diff`` is present exactly when ``a1`` holds and is then the
    two-dimensional image of the difference.
    """

    a1: bool
    a2: bool
    diff_rank: int
    type_pair: tuple[int, int] | None
    image_of_diff: Subspace | None

    @property
    def adjacent(self) -> bool:
        return self.a1 and self.a2


def condition_a1(a: SpectralOperator, b: SpectralOperator) -> tuple[bool, int]:
    """Rank-two test on the difference; returns (rank == 2, rank)."""
    b = align_to(a, b)
    rank = numerical_rank(b.matrix - a.matrix, a.tol)
    return rank == 2, rank


def _invariant_under(space: Subspace, M: np.ndarray) -> bool:
    # ||(I - P) M P||_2 <= rel * ||M||_2 decides M(space) <= space.
    P = space.projector()
    leak = (np.eye(space.ambient_dim) - P) @ M @ P
    return bool(np.linalg.norm(leak, 2) <= INVARIANCE_REL * np.linalg.norm(M, 2))


def condition_a2(a: SpectralOperator, b: SpectralOperator) -> bool:
    """Invariance of the difference's image under the first operator.

    One-sided sufficiency: invariance under one operator forces invariance
    of both the image and the kernel under both operators, so only
    ``a * image <= image`` is tested here (the rest is cross-checked in the
    property suite).  Requires the rank-two condition.
    """
    b = align_to(a, b)
    diff = b.matrix - a.matrix
    rank = numerical_rank(diff, a.tol)
    if rank != 2:
        raise PreconditionViolated(f"difference has rank {rank}, not 2")
    image = orthonormalize(diff, a.tol)
    return _invariant_under(image, a.matrix)


def classify_adjacency(
    a: SpectralOperator, b: SpectralOperator
) -> tuple[int, int] | None:
    """Structural classification from spectral data alone.

    Returns the unique index pair ``(i, j)`` such that the eigenspaces at
    ``i`` and at ``j`` are each adjacent as subspaces while every other
    eigenspace coincides, or ``None`` when no such pair exists.
    """
    b = align_to(a, b)
    adjacent_at = []
    for t in range(a.k):
        x, y = a.eigenspaces[t], b.eigenspaces[t]
        angles = principal_angles(x, y)
        shared = int(np.count_nonzero(angles < a.tol.angle_abs))
        if shared == x.dim:
            continue
        if shared == x.dim - 1:
            adjacent_at.append(t)
        else:
            return None
    if len(adjacent_at) == 2:
        return tuple(adjacent_at)
    return None


def is_adjacent(a: SpectralOperator, b: SpectralOperator) -> AdjacencyVerdict:
    """Full adjacency verdict, with the predicate and the classification
    computed independently and checked against each other.

    Raises InternalInconsistency when the predicate says adjacent but no
    structural pair exists: that would be a tolerance failure and is
    surfaced, never silently patched.
    """
    b = align_to(a, b)
    diff = b.matrix - a.matrix
    rank = numerical_rank(diff, a.tol)
    a1 = rank == 2
    image = orthonormalize(diff, a.tol) if a1 else None
    a2 = _invariant_under(image, a.matrix) if a1 else False
    pair = classify_adjacency(a, b)
    if a1 and a2:
        if pair is None:
            raise InternalInconsistency(
                "predicate says adjacent but no structural index pair was found"
            )
        return AdjacencyVerdict(True, True, rank, pair, image)
    return AdjacencyVerdict(a1, a2, rank, None, image)


def adjacency_oracle(a: SpectralOperator, b: SpectralOperator) -> bool:
    """Agreement of the matrix-level predicate with the structural
    classification.  Any ``False`` return is a counterexample report."""
    a1, _ = condition_a1(a, b)
    lhs = a1 and condition_a2(a, b) if a1 else False
    rhs = classify_adjacency(a, b) is not None
    return lhs == rhs


def image_relation(a: SpectralOperator, b: SpectralOperator) -> str:
    """Relation of the operator images: 'equal', 'adjacent' or 'other'."""
    im_a, im_b = operator_image(a), operator_image(b)
    if im_a.dim == im_b.dim and same_subspace(im_a, im_b):
        return "equal"
    if im_a.dim == im_b.dim and subspaces_adjacent(im_a, im_b):
        return "adjacent"
    return "other"


def make_ij_adjacent(
    a: SpectralOperator, i: int, j: int, rng: np.random.Generator
) -> SpectralOperator:
    """Class member adjacent to ``a`` with type exactly ``(i, j)``.

    Inside the span of the two eigenspaces, one frame vector of the i-th
    eigenspace is rotated toward the j-th by a random angle; the j-th
    eigenspace becomes the complement within the span, all other
    eigenspaces are copied verbatim.  Angles too close to 0 or pi/2 are
    resampled so the output never collapses back onto ``a``.
    """
    if i == j or not (0 <= i < a.k) or not (0 <= j < a.k):
        raise BadIndices(f"indices must be distinct and in 0..{a.k - 1}: ({i}, {j})")
    xi, xj = a.eigenspaces[i], a.eigenspaces[j]
    span = subspace_sum(xi, xj)
    col = int(rng.integers(xi.dim))
    w = xj.frame @ _random_unit(rng, xj.dim)
    theta = rng.uniform(0.0, np.pi / 2)
    while min(theta, np.pi / 2 - theta) < 1e-2:
        theta = rng.uniform(0.0, np.pi / 2)
    rotated = np.cos(theta) * xi.frame[:, col] + np.sin(theta) * w
    cols = [rotated if c == col else xi.frame[:, c] for c in range(xi.dim)]
    new_i = Subspace(np.column_stack(cols), a.tol)
    new_j = complement(new_i, within=span)
    return a.replace_eigenspaces({i: new_i, j: new_j})


def _random_unit(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def pseudo_adjacent_c3(tol: Tolerance = DEFAULT_TOL):
    """The fixed rank-two-but-not-adjacent pair in C^3.

    Both operators are the sum of the projection onto span{e1} and the
    projection onto a line tilted 45 degrees toward e2 (resp. e3); they
    are unitarily conjugate via the e2/e3 swap, the difference has rank
    two, yet its kernel span{-e1+e2+e3} is not invariant.
    """
    ma = 0.5 * np.array([[3, 1, 0], [1, 1, 0], [0, 0, 0]], dtype=complex)
    mb = 0.5 * np.array([[3, 0, 1], [0, 0, 0], [1, 0, 1]], dtype=complex)
    sigma = tuple(np.linalg.eigvalsh(ma))
    sig = ClassSignature(sigma, (1, 1, 1), 3)
    return from_matrix(ma, sig, tol), from_matrix(mb, sig, tol)


def pseudo_adjacent_general(
    core,
    x: Subspace,
    a: float,
    rng: np.random.Generator,
    tol: Tolerance = DEFAULT_TOL,
):
    """Random pair satisfying the rank-two condition whose adjacency is
    controlled by the tilt of ``x`` against the image of ``core``.

    ``core`` is a Hermitian matrix; ``x`` a line not inside its image;
    the first operator is ``core + a * P_x``.  A unitary fixing the image
    of ``core`` pointwise carries its enlarged image onto a random twin
    subspace, producing the partner operator.  When ``x`` is not
    orthogonal to the image of ``core`` the pair fails the invariance
    condition; when orthogonal, the pair is genuinely adjacent.

    Returns ``(A, B, diagnostics)`` with the diagnostics reporting the
    orthogonality flag and both adjacency conditions.
    """
    C = np.asarray(core, dtype=complex)
    n = C.shape[0]
    if C.ndim != 2 or C.shape[1] != n:
        raise InvalidInput("core must be a square matrix")
    scale = np.abs(C).max()
    if scale > 0 and np.abs(C - C.conj().T).max() > 1e-10 * scale:
        raise NotHermitian("core must be Hermitian")
    if a == 0.0:
        raise DegenerateInput("the scalar weight must be nonzero")
    if x.dim != 1 or x.ambient_dim != n:
        raise DimensionMismatch(
            f"expected a line in dimension {n}, got dim={x.dim}, ambient={x.ambient_dim}"
        )
    im_c = orthonormalize(C, tol)
    if im_c.dim and contains(im_c, x):
        raise DegenerateInput("the line must not be contained in the image of core")
    m_space = subspace_sum(im_c, x)
    if m_space.dim >= n:
        raise DegenerateInput(
            "no room for a twin subspace: the enlarged image fills the ambient space"
        )

    x_vec = x.frame[:, 0]
    # unit direction of M orthogonal to the image of core
    xu = x_vec - im_c.frame @ (im_c.frame.conj().T @ x_vec)
    xu = xu / np.linalg.norm(xu)
    # random unit direction orthogonal to the image with a healthy component
    # outside M, so the twin subspace differs from M
    while True:
        g = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        yu = g - im_c.frame @ (im_c.frame.conj().T @ g)
        norm = np.linalg.norm(yu)
        if norm < 1e-8:
            continue
        yu = yu / norm
        outside = yu - m_space.frame @ (m_space.frame.conj().T @ yu)
        if np.linalg.norm(outside) > 0.1:
            break

    # unitary: identity off the (xu, yu) plane, rotation xu -> yu inside it
    z = yu - xu * np.vdot(xu, yu)
    z = z / np.linalg.norm(z)
    basis = np.column_stack([xu, z])
    alpha, beta = np.vdot(xu, yu), np.vdot(z, yu)
    u2 = np.array([[alpha, -np.conj(beta)], [beta, np.conj(alpha)]])
    U = np.eye(n, dtype=complex) - basis @ basis.conj().T + basis @ u2 @ basis.conj().T

    y_vec = U @ x_vec
    ma = C + a * np.outer(x_vec, x_vec.conj())
    mb = C + a * np.outer(y_vec, y_vec.conj())

    sig = _discover_signature(ma)
    A = from_matrix(ma, sig, tol)
    B = from_matrix(mb, sig, tol)

    core_component = np.linalg.norm(im_c.frame.conj().T @ x_vec) if im_c.dim else 0.0
    a1, rank = condition_a1(A, B)
    a2 = bool(condition_a2(A, B)) if a1 else False
    diagnostics = {
        "x_orthogonal_to_core": bool(core_component < tol.angle_abs),
        "a1": a1,
        "diff_rank": rank,
        "a2": a2,
        "adjacent": bool(a1 and a2),
    }
    return A, B, diagnostics


def _discover_signature(M: np.ndarray) -> ClassSignature:
    """Cluster the spectrum of a Hermitian matrix into a signature.

    Consecutive eigenvalues closer than ten admissible gaps are merged;
    clusters near zero snap to the literal kernel eigenvalue 0.0.
    """
    from .operators import MIN_EIGENVALUE_GAP

    w = np.linalg.eigvalsh((M + M.conj().T) / 2)
    gap = 10 * MIN_EIGENVALUE_GAP
    clusters: list[list[float]] = [[w[0]]]
    for value in w[1:]:
        if value - clusters[-1][-1] < gap:
            clusters[-1].append(value)
        else:
            clusters.append([value])
    values = [float(np.mean(c)) for c in clusters]
    snapped = [0.0 if abs(v) < gap else v for v in values]
    if len(snapped) < 2:
        raise DegenerateInput("spectrum collapsed to a single cluster")
    return ClassSignature(tuple(snapped), tuple(len(c) for c in clusters), M.shape[0])


def image_direct_sum_check(T, Q, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Rank additivity for Hermitian operators with disjoint images:
    rank(T + Q) == rank(T) + rank(Q).  Nontrivially intersecting images
    violate the precondition."""
    T = np.asarray(T, dtype=complex)
    Q = np.asarray(Q, dtype=complex)
    for M in (T, Q):
        scale = np.abs(M).max()
        if scale > 0 and np.abs(M - M.conj().T).max() > 1e-10 * scale:
            raise NotHermitian("both operators must be Hermitian")
    im_t = orthonormalize(T, tol)
    im_q = orthonormalize(Q, tol)
    if intersect(im_t, im_q).dim > 0:
        raise PreconditionViolated("images intersect nontrivially")
    return numerical_rank(T + Q, tol) == im_t.dim + im_q.dim

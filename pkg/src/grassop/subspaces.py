"""Tolerance-aware subspace arithmetic over C^N.

A subspace is stored as a dense complex frame with orthonormal columns.
Frames are non-canonical: equality, containment and adjacency are always
decided through principal angles against an explicit :class:`Tolerance`,
never by comparing frame entries.  The zero subspace (an ``N x 0`` frame)
is a first-class value.

All operations are pure functions on immutable values; randomness never
enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvalidInput, NotContained

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "Subspace",
    "zero_subspace",
    "full_space",
    "orthonormalize",
    "numerical_rank",
    "principal_angles",
    "same_subspace",
    "contains",
    "intersect",
    "subspace_sum",
    "complement",
    "subspaces_adjacent",
    "grassmann_path",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical cutoffs: relative for rank decisions, absolute (radians)
    for subspace-equality decisions."""

    rank_rel: float = 1e-9
    angle_abs: float = 1e-8

    def __post_init__(self):
        if not 0.0 < self.rank_rel < 1e-3:
            raise InvalidInput(f"rank_rel must lie in (0, 1e-3), got {self.rank_rel}")
        if not 0.0 < self.angle_abs < 1e-3:
            raise InvalidInput(f"angle_abs must lie in (0, 1e-3), got {self.angle_abs}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace of C^N spanned by orthonormal frame columns.

    The frame has shape ``(ambient_dim, dim)``; ``dim == 0`` encodes the
    zero subspace.  Instances are immutable; the frame array is locked
    against writes on construction.
    """

    frame: np.ndarray
    tol: Tolerance = field(default=DEFAULT_TOL)

    def __post_init__(self):
        frame = np.array(self.frame, dtype=complex, copy=True, order="F")
        if frame.ndim != 2:
            raise InvalidInput("frame must be a 2-d array")
        if frame.shape[0] < 1:
            raise InvalidInput("ambient dimension must be positive")
        if frame.shape[1] > frame.shape[0]:
            raise InvalidInput("frame has more columns than the ambient dimension")
        if not np.isfinite(frame).all():
            raise InvalidInput("frame has non-finite entries")
        if frame.shape[1]:
            defect = frame.conj().T @ frame - np.eye(frame.shape[1])
            if np.abs(defect).max() > 10 * self.tol.angle_abs:
                raise InvalidInput("frame columns are not orthonormal")
        frame.setflags(write=False)
        object.__setattr__(self, "frame", frame)

    @property
    def ambient_dim(self) -> int:
        return self.frame.shape[0]

    @property
    def dim(self) -> int:
        return self.frame.shape[1]

    def projector(self) -> np.ndarray:
        """Orthogonal projector onto the subspace, as an N x N matrix."""
        return self.frame @ self.frame.conj().T

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def zero_subspace(ambient_dim: int, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    return Subspace(np.zeros((ambient_dim, 0)), tol)


def full_space(ambient_dim: int, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    return Subspace(np.eye(ambient_dim), tol)


def _as_matrix(vectors) -> np.ndarray:
    M = np.asarray(vectors, dtype=complex)
    if M.ndim == 1:
        M = M[:, None]
    if M.ndim != 2:
        raise InvalidInput("expected a vector or a 2-d array of column vectors")
    if not np.isfinite(M).all():
        raise InvalidInput("input has non-finite entries")
    return M


def orthonormalize(vectors, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Column span of ``vectors`` as a Subspace.

    The dimension equals the numerical rank of the input under
    ``tol.rank_rel``; dependent and zero columns are dropped.
    """
    M = _as_matrix(vectors)
    n, m = M.shape
    if m == 0:
        return zero_subspace(n, tol)
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] <= 0.0:
        return zero_subspace(n, tol)
    r = int(np.count_nonzero(s > tol.rank_rel * s[0]))
    return Subspace(U[:, :r], tol)


def numerical_rank(M, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of singular values above ``rank_rel`` times the largest one.

    The zero matrix (and the empty matrix) has rank 0.
    """
    M = _as_matrix(M)
    if min(M.shape) == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel * s[0]))


def _check_same_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )


def principal_angles(s1: Subspace, s2: Subspace) -> np.ndarray:
    """Principal angles between two subspaces, nondecreasing, in [0, pi/2].

    Returns ``min(dim s1, dim s2)`` angles.  Small angles are taken from
    the sines (singular values of the residual of one frame against the
    other), large angles from the cosines, so angles near zero are not
    floored at the sqrt(eps) arccos round-off.
    """
    _check_same_ambient(s1, s2)
    if min(s1.dim, s2.dim) == 0:
        return np.zeros(0)
    big, small = (s1, s2) if s1.dim >= s2.dim else (s2, s1)
    gram = big.frame.conj().T @ small.frame
    cosines = np.linalg.svd(gram, compute_uv=False)  # descending, angles ascending
    resid = small.frame - big.frame @ gram
    sines = np.linalg.svd(resid, compute_uv=False)[::-1]  # ascending, same order
    cosines = np.clip(cosines, 0.0, 1.0)
    sines = np.clip(sines, 0.0, 1.0)
    return np.where(cosines**2 >= 0.5, np.arcsin(sines), np.arccos(cosines))


def same_subspace(s1: Subspace, s2: Subspace) -> bool:
    """Equality test: equal dimensions and every principal angle below
    ``angle_abs``."""
    _check_same_ambient(s1, s2)
    if s1.dim != s2.dim:
        return False
    if s1.dim == 0:
        return True
    return bool(principal_angles(s1, s2)[-1] < s1.tol.angle_abs)


def contains(outer: Subspace, inner: Subspace) -> bool:
    """True when every direction of ``inner`` lies in ``outer`` within
    ``angle_abs`` (per-column sine of the angle to ``outer``)."""
    _check_same_ambient(outer, inner)
    if inner.dim == 0:
        return True
    if inner.dim > outer.dim:
        return False
    resid = inner.frame - outer.frame @ (outer.frame.conj().T @ inner.frame)
    return bool(np.linalg.norm(resid, axis=0).max() < inner.tol.angle_abs)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via principal vectors.

    A principal direction of ``s1`` belongs to the intersection when its
    sine against ``s2`` falls below ``angle_abs``.
    """
    _check_same_ambient(s1, s2)
    tol = s1.tol
    if s1.dim == 0 or s2.dim == 0:
        return zero_subspace(s1.ambient_dim, tol)
    U, _, _ = np.linalg.svd(s1.frame.conj().T @ s2.frame)
    P = s1.frame @ U
    resid = P - s2.frame @ (s2.frame.conj().T @ P)
    sines = np.linalg.norm(resid, axis=0)
    keep = sines < tol.angle_abs
    return Subspace(P[:, keep], tol)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    """Span of the union of the two frames."""
    _check_same_ambient(s1, s2)
    if s1.dim == 0:
        return s2
    if s2.dim == 0:
        return s1
    return orthonormalize(np.hstack([s1.frame, s2.frame]), s1.tol)


def complement(s: Subspace, within: Subspace | None = None) -> Subspace:
    """Orthogonal complement of ``s`` inside ``within`` (default: ambient).

    Requires ``s`` to be contained in ``within``; dimensions satisfy
    ``dim(result) = dim(within) - dim(s)`` and the result is orthogonal
    to ``s``.
    """
    if within is None:
        if s.dim == 0:
            return full_space(s.ambient_dim, s.tol)
        U = np.linalg.svd(s.frame, full_matrices=True)[0]
        return Subspace(U[:, s.dim:], s.tol)
    _check_same_ambient(s, within)
    if not contains(within, s):
        raise NotContained("subspace is not contained in the requested ambient")
    if s.dim == 0:
        return within
    G = s.frame.conj().T @ within.frame
    _, sv, Vh = np.linalg.svd(G, full_matrices=True)
    r = int(np.count_nonzero(sv > s.tol.rank_rel * sv[0])) if sv.size else 0
    return Subspace(within.frame @ Vh.conj().T[:, r:], s.tol)


def subspaces_adjacent(s1: Subspace, s2: Subspace) -> bool:
    """Adjacency of equal-dimensional subspaces: intersection of dimension
    exactly one less than their own."""
    _check_same_ambient(s1, s2)
    if s1.dim != s2.dim:
        raise DimensionMismatch(f"dimensions differ: {s1.dim} vs {s2.dim}")
    m = s1.dim
    if m == 0:
        return False
    angles = principal_angles(s1, s2)
    shared = int(np.count_nonzero(angles < s1.tol.angle_abs))
    return shared == m - 1


def grassmann_path(x: Subspace, y: Subspace, ambient: Subspace | None = None) -> list[Subspace]:
    """Path of pairwise-adjacent subspaces from ``x`` to ``y``.

    One basis vector of ``x`` outside the common part is exchanged at a
    time for a basis vector of ``y`` outside the common part, in ascending
    column order of the orthonormal complement bases.  The edge count is
    ``dim x - dim(x & y)``; first and last elements are ``x`` and ``y``
    verbatim.
    """
    _check_same_ambient(x, y)
    if x.dim != y.dim:
        raise DimensionMismatch(f"endpoint dimensions differ: {x.dim} vs {y.dim}")
    if ambient is not None:
        if not contains(ambient, x) or not contains(ambient, y):
            raise NotContained("path endpoints must lie inside the ambient subspace")
    core = intersect(x, y)
    steps = x.dim - core.dim
    if steps == 0:
        return [x]
    leaving = complement(core, within=x)
    entering = complement(core, within=y)
    path = [x]
    for t in range(1, steps):
        cols = np.hstack([core.frame, entering.frame[:, :t], leaving.frame[:, t:]])
        z = orthonormalize(cols, x.tol)
        if z.dim != x.dim:
            raise InvalidInput("path step collapsed; endpoints too close to tolerance")
        path.append(z)
    path.append(y)
    return path

"""Symmetries of the adjacency graph as implemented objects.

A symmetry is a unitary (or anti-unitary, modeled as conjugate-then-
multiply) matrix together with a multiplicity-preserving permutation of
eigenvalue indices; it acts on a class member by permuting eigenspaces
and conjugating frames.  Every such map is a graph automorphism; with the
identity permutation it preserves each adjacency type, and a nontrivial
permutation transports types by index relabeling.

For two-eigenvalue classes any invertible (anti)linear map induces an
automorphism through its action on the first eigenspace, including maps
that do not preserve orthogonality; the defect probe below tells the two
situations apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .adjacency import is_adjacent, make_ij_adjacent
from .errors import (
    BadIndices,
    GrassopError,
    InvalidInput,
    NotInSd,
    NotUnitary,
    RequiresKEquals2,
    SignatureMismatch,
)
from .operators import (
    ClassSignature,
    Permutation,
    SpectralOperator,
    apply_permutation,
    from_matrix,
    make_operator,
    random_operator,
)
from .subspaces import DEFAULT_TOL, Subspace, Tolerance, complement, orthonormalize

__all__ = [
    "UNITARY_TOL",
    "Symmetry",
    "SemilinearMap",
    "identity_symmetry",
    "apply_symmetry",
    "compose",
    "inverse",
    "commutation_check",
    "AutomorphismReport",
    "verify_automorphism",
    "adjacency_type_transport",
    "semilinear_k2_automorphism",
    "orthogonality_defect",
]

# Max-entry deviation of U^H U from the identity accepted at construction.
UNITARY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Symmetry:
    """A graph symmetry: (anti)unitary conjugation composed with an
    eigenspace permutation, tied to one signature."""

    signature: ClassSignature
    matrix: np.ndarray
    antiunitary: bool = False
    permutation: Permutation | None = None

    def __post_init__(self):
        U = np.array(self.matrix, dtype=complex, copy=True)
        n = self.signature.ambient_dim
        if U.shape != (n, n):
            raise InvalidInput(f"matrix must be {n} x {n}")
        if not np.isfinite(U).all():
            raise InvalidInput("matrix has non-finite entries")
        defect = np.abs(U.conj().T @ U - np.eye(n)).max()
        if defect > UNITARY_TOL:
            raise NotUnitary(f"matrix is not unitary (defect {defect:.2e})")
        U.setflags(write=False)
        object.__setattr__(self, "matrix", U)
        perm = self.permutation or Permutation.identity(self.signature.k)
        if perm.size != self.signature.k or not perm.preserves_multiplicities(
            self.signature
        ):
            raise NotInSd("permutation does not preserve the multiplicities")
        object.__setattr__(self, "permutation", perm)


def identity_symmetry(sig: ClassSignature) -> Symmetry:
    return Symmetry(sig, np.eye(sig.ambient_dim))


def apply_symmetry(sym: Symmetry, op: SpectralOperator) -> SpectralOperator:
    """Permute eigenspaces, then conjugate every frame (with entrywise
    conjugation first when anti-unitary).  Stays in the class."""
    if op.signature != sym.signature:
        raise SignatureMismatch("operator signature differs from the symmetry's")
    permuted = apply_permutation(sym.permutation, op)
    frames = []
    for space in permuted.eigenspaces:
        block = np.conj(space.frame) if sym.antiunitary else space.frame
        frames.append(Subspace(sym.matrix @ block, space.tol))
    return make_operator(op.signature, frames)


def compose(s1: Symmetry, s2: Symmetry) -> Symmetry:
    """Symmetry acting as: apply ``s2`` first, then ``s1``."""
    if s1.signature != s2.signature:
        raise SignatureMismatch("symmetries live on different signatures")
    u2 = np.conj(s2.matrix) if s1.antiunitary else s2.matrix
    return Symmetry(
        s1.signature,
        s1.matrix @ u2,
        antiunitary=s1.antiunitary != s2.antiunitary,
        permutation=s1.permutation.compose(s2.permutation),
    )


def inverse(sym: Symmetry) -> Symmetry:
    u_inv = sym.matrix.conj().T
    if sym.antiunitary:
        u_inv = np.conj(u_inv)
    return Symmetry(
        sym.signature,
        u_inv,
        antiunitary=sym.antiunitary,
        permutation=sym.permutation.inverse(),
    )


def _conjugated_matrix(matrix: np.ndarray, antiunitary: bool, M: np.ndarray):
    source = np.conj(M) if antiunitary else M
    return matrix @ source @ matrix.conj().T


def commutation_check(
    u_part,
    perm: Permutation,
    samples,
    rtol: float = 1e-9,
) -> bool:
    """Whether conjugation and the permutation action commute on every
    sample: permuting first and conjugating equals conjugating first and
    permuting the recovered operator.

    ``u_part`` may be a Symmetry with identity permutation or a raw
    matrix; a raw matrix is not validated, so a corrupted input makes the
    check report False instead of raising.
    """
    if isinstance(u_part, Symmetry):
        if not u_part.permutation.is_identity():
            raise InvalidInput("the conjugation part must carry the identity permutation")
        matrix, anti = u_part.matrix, u_part.antiunitary
    else:
        matrix, anti = np.asarray(u_part, dtype=complex), False
    for op in samples:
        lhs = _conjugated_matrix(matrix, anti, apply_permutation(perm, op).matrix)
        conjugated = _conjugated_matrix(matrix, anti, op.matrix)
        try:
            recovered = from_matrix(conjugated, op.signature, op.tol)
        except GrassopError:
            return False
        rhs = apply_permutation(perm, recovered).matrix
        scale = max(1.0, float(np.linalg.norm(lhs, 2)))
        if np.linalg.norm(lhs - rhs, 2) > rtol * scale:
            return False
    return True


@dataclass
class AutomorphismReport:
    """Aggregated outcome of randomized automorphism trials."""

    trials: int = 0
    adjacency_checks: int = 0
    adjacency_mismatches: list = field(default_factory=list)
    class_failures: list = field(default_factory=list)
    type_transports: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.adjacency_mismatches and not self.class_failures


def verify_automorphism(
    sym,
    trials: int,
    rng: np.random.Generator,
    signature: ClassSignature | None = None,
    pairs_per_trial: int = 4,
) -> AutomorphismReport:
    """Randomized check that a map preserves adjacency biconditionally.

    Each trial samples a base operator, constructed adjacent partners
    (positive cases) and generic partners (negative cases), maps all of
    them, and compares adjacency verdicts before and after; for genuine
    symmetries the backward direction is exercised through the inverse.
    Observed type transport is recorded per input type.

    ``sym`` may be a Symmetry or a raw matrix (conjugation with identity
    permutation, no unitarity validation): broken inputs surface as
    class-membership failures in the report rather than exceptions.
    """
    if isinstance(sym, Symmetry):
        sig = sym.signature
        inv = inverse(sym)

        def image(op):
            return apply_symmetry(sym, op)

        def preimage(op):
            return apply_symmetry(inv, op)

    else:
        matrix = np.asarray(sym, dtype=complex)
        if signature is None:
            raise InvalidInput("a raw matrix needs an explicit signature")
        sig = signature
        inv_matrix = np.linalg.inv(matrix)

        def image(op):
            return from_matrix(
                _conjugated_matrix(matrix, False, op.matrix), sig, op.tol
            )

        def preimage(op):
            return from_matrix(
                _conjugated_matrix(inv_matrix, False, op.matrix), sig, op.tol
            )

    report = AutomorphismReport()
    k = sig.k
    for trial in range(trials):
        report.trials += 1
        base = random_operator(sig, rng)
        partners = []
        for _ in range(pairs_per_trial):
            i = int(rng.integers(k))
            j = int(rng.integers(k - 1))
            j = j if j < i else j + 1
            partners.append(make_ij_adjacent(base, i, j, rng))
        partners.append(random_operator(sig, rng))
        try:
            base_image = image(base)
            partner_images = [image(op) for op in partners]
        except GrassopError as exc:
            report.class_failures.append({"trial": trial, "error": str(exc)})
            continue
        for op, op_image in zip(partners, partner_images):
            report.adjacency_checks += 1
            before = is_adjacent(base, op)
            after = is_adjacent(base_image, op_image)
            if before.adjacent != after.adjacent:
                report.adjacency_mismatches.append(
                    {"trial": trial, "before": before.adjacent, "after": after.adjacent}
                )
                continue
            if before.adjacent:
                seen = report.type_transports.setdefault(before.type_pair, set())
                seen.add(after.type_pair)
            if isinstance(sym, Symmetry):
                back_base = preimage(base_image)
                back_op = preimage(op_image)
                again = is_adjacent(back_base, back_op)
                if again.adjacent != before.adjacent:
                    report.adjacency_mismatches.append(
                        {"trial": trial, "direction": "inverse"}
                    )
    return report


def adjacency_type_transport(
    sym: Symmetry, pair: tuple[int, int]
) -> tuple[int, int]:
    """Image type of a given adjacency type under the symmetry.

    The permutation relabels indices, so an input pair maps through the
    inverse permutation; multiplicities of the transported pair always
    match the input pair's.
    """
    i, j = pair
    k = sym.signature.k
    if i == j or not (0 <= i < k and 0 <= j < k):
        raise BadIndices(f"indices must be distinct and in 0..{k - 1}: {pair}")
    inv = sym.permutation.inverse()
    out = tuple(sorted((inv(i), inv(j))))
    d = sym.signature.multiplicities
    assert sorted((d[i], d[j])) == sorted((d[out[0]], d[out[1]]))
    return out


@dataclass(frozen=True, eq=False)
class SemilinearMap:
    """An invertible linear or antilinear map of the ambient space."""

    matrix: np.ndarray
    antilinear: bool = False
    tol: Tolerance = DEFAULT_TOL

    def __post_init__(self):
        M = np.array(self.matrix, dtype=complex, copy=True)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise InvalidInput("expected a square matrix")
        if not np.isfinite(M).all():
            raise InvalidInput("matrix has non-finite entries")
        sv = np.linalg.svd(M, compute_uv=False)
        if sv[-1] <= self.tol.rank_rel * sv[0]:
            raise InvalidInput("matrix is not invertible within tolerance")
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)

    def __call__(self, vectors: np.ndarray) -> np.ndarray:
        source = np.conj(vectors) if self.antilinear else vectors
        return self.matrix @ source


def semilinear_k2_automorphism(vmap: SemilinearMap, sig: ClassSignature):
    """Operator map induced on a two-eigenvalue class: the first eigenspace
    is pushed through the map and re-orthonormalized, the second is its
    orthogonal complement.

    Preserves adjacency for every invertible map, including maps that are
    no scalar multiple of a unitary; defined only for k = 2.
    """
    if sig.k != 2:
        raise RequiresKEquals2(f"the construction needs k = 2, got k = {sig.k}")
    if vmap.matrix.shape[0] != sig.ambient_dim:
        raise SignatureMismatch("map dimension differs from the signature's ambient")

    def transform(op: SpectralOperator) -> SpectralOperator:
        if op.signature != sig:
            raise SignatureMismatch("operator does not carry the expected signature")
        pushed = orthonormalize(vmap(op.eigenspaces[0].frame), op.tol)
        if pushed.dim != sig.multiplicities[0]:
            raise InvalidInput("the map collapsed the first eigenspace")
        return make_operator(sig, (pushed, complement(pushed)))

    return transform


def orthogonality_defect(
    vmap: SemilinearMap,
    trials: int,
    rng: np.random.Generator,
    rtol: float = 1e-8,
) -> tuple[bool, float | None]:
    """Whether the map sends orthogonal vectors to orthogonal vectors.

    Samples random orthogonal pairs; when all pass, extracts the scalar c
    as the image norm of a fixed unit vector and confirms the rescaled map
    is unitary, returning (True, c).  Any failure returns (False, None).
    """
    n = vmap.matrix.shape[0]
    for _ in range(trials):
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        x /= np.linalg.norm(x)
        g = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = g - x * np.vdot(x, g)
        norm = np.linalg.norm(y)
        if norm < 1e-8:
            continue
        y /= norm
        u, w = vmap(x), vmap(y)
        if abs(np.vdot(u, w)) > rtol * np.linalg.norm(u) * np.linalg.norm(w):
            return False, None
    e1 = np.zeros(n, dtype=complex)
    e1[0] = 1.0
    c = float(np.linalg.norm(vmap(e1)))
    if c <= 0:
        return False, None
    rescaled = vmap.matrix / c
    if np.abs(rescaled.conj().T @ rescaled - np.eye(n)).max() > rtol:
        return False, None
    return True, c

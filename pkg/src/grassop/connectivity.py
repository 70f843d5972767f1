"""Connectivity of the adjacency graph: pair-restricted paths, the general
path construction, reduced classes and connected-component descriptors.

Two class members are (i,j)-connected exactly when their eigenspaces agree
at every index outside {i, j}; those components are in bijection with a
reduced class in which the i-th eigenspace has been absorbed into the
j-th.  Components are handled as descriptors (base operator plus merged
pair), never as materialized vertex sets.

Path lengths returned here are construction artifacts, not graph
distances; no minimality is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adjacency import is_adjacent
from .errors import (
    BadIndices,
    ClassMismatch,
    DimensionMismatch,
    InternalInconsistency,
    NotContained,
    NotIJConnected,
    PreconditionViolated,
)
from .operators import (
    ClassSignature,
    SpectralOperator,
    align_to,
    make_operator,
    same_class,
)
from .subspaces import (
    Subspace,
    complement,
    contains,
    grassmann_path,
    intersect,
    orthonormalize,
    same_subspace,
    subspace_sum,
)

__all__ = [
    "OperatorPath",
    "ComponentDescriptor",
    "ComponentAdjacency",
    "ij_connected",
    "ij_path",
    "connect",
    "validate_path",
    "reduced_signature",
    "component_of",
    "component_contains",
    "component_member",
    "random_component_member",
    "components_adjacent",
]


@dataclass(frozen=True)
class OperatorPath:
    """A walk in the adjacency graph: vertices plus one type pair per edge."""

    vertices: tuple[SpectralOperator, ...]
    edge_types: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edge_types)


def validate_path(path: OperatorPath) -> bool:
    """Every consecutive pair adjacent with the recorded type."""
    if len(path.vertices) != len(path.edge_types) + 1:
        return False
    for a, b, pair in zip(path.vertices, path.vertices[1:], path.edge_types):
        verdict = is_adjacent(a, b)
        if not verdict.adjacent or verdict.type_pair != tuple(sorted(pair)):
            return False
    return True


def _check_pair(k: int, i: int, j: int):
    if i == j or not (0 <= i < k) or not (0 <= j < k):
        raise BadIndices(f"indices must be distinct and in 0..{k - 1}: ({i}, {j})")


def ij_connected(a: SpectralOperator, b: SpectralOperator, i: int, j: int) -> bool:
    """Same eigenspace at every index outside {i, j}."""
    _check_pair(a.k, i, j)
    b = align_to(a, b)
    return all(
        same_subspace(a.eigenspaces[p], b.eigenspaces[p])
        for p in range(a.k)
        if p not in (i, j)
    )


def ij_path(a: SpectralOperator, b: SpectralOperator, i: int, j: int) -> OperatorPath:
    """Path of (i,j)-edges only, driven through the side with the smaller
    multiplicity.

    The moving eigenspace walks a pairwise-adjacent subspace path inside
    the span of the two eigenspaces; the partner eigenspace is the
    orthogonal complement within that span at every step.
    """
    b = align_to(a, b)
    if not ij_connected(a, b, i, j):
        raise NotIJConnected(
            f"operators differ at an eigenspace outside ({i}, {j})"
        )
    if same_subspace(a.eigenspaces[i], b.eigenspaces[i]):
        return OperatorPath((a,), ())
    d = a.signature.multiplicities
    drive, other = (i, j) if d[i] <= d[j] else (j, i)
    span = subspace_sum(a.eigenspaces[i], a.eigenspaces[j])
    target = orthonormalize(
        span.frame @ (span.frame.conj().T @ b.eigenspaces[drive].frame), a.tol
    )
    if target.dim != d[drive]:
        raise InternalInconsistency("drive eigenspace does not fit inside the span")
    steps = grassmann_path(a.eigenspaces[drive], target, span)
    verts = [a]
    for z in steps[1:-1]:
        verts.append(
            a.replace_eigenspaces({drive: z, other: complement(z, within=span)})
        )
    verts.append(b)
    pair = (min(i, j), max(i, j))
    return OperatorPath(tuple(verts), tuple(pair for _ in steps[1:]))


def connect(a: SpectralOperator, b: SpectralOperator) -> OperatorPath:
    """Path from ``a`` to ``b`` through adjacent operators.

    Eigenspaces are aligned one index at a time, cheapest multiplicity
    first.  Aligning one index works inside the span of all still
    unmatched eigenspaces: the moving eigenspace follows a subspace path,
    and each subspace step costs a short burst of edges: the new direction
    is first gathered into a single partner eigenspace by pair rotations,
    then one pair move lands the step.  Once at most two indices differ
    the pair-restricted path finishes the job.
    """
    if not same_class(a, b):
        raise ClassMismatch("endpoints lie in different conjugacy classes")
    b = align_to(a, b)
    verts: list[SpectralOperator] = [a]
    types: list[tuple[int, int]] = []
    while True:
        cur = verts[-1]
        diff = [
            t
            for t in range(a.k)
            if not same_subspace(cur.eigenspaces[t], b.eigenspaces[t])
        ]
        if not diff:
            break
        if len(diff) == 1:
            raise InternalInconsistency(
                "exactly one eigenspace differs; completeness forbids this"
            )
        if len(diff) == 2:
            tail = ij_path(cur, b, diff[0], diff[1])
            verts.extend(tail.vertices[1:])
            types.extend(tail.edge_types)
            break
        d = a.signature.multiplicities
        r = min(diff, key=lambda t: (d[t], -t))
        _align_one_index(verts, types, b, r, diff)
    return OperatorPath(tuple(verts), tuple(types))


def _align_one_index(verts, types, target, r, active):
    """Move the r-th eigenspace of the last vertex onto the target's,
    using edges that only touch indices in ``active``."""
    cur = verts[-1]
    tol = cur.tol
    ambient = orthonormalize(
        np.hstack([cur.eigenspaces[t].frame for t in active]), tol
    )
    goal = orthonormalize(
        ambient.frame @ (ambient.frame.conj().T @ target.eigenspaces[r].frame), tol
    )
    if goal.dim != cur.eigenspaces[r].dim:
        raise InternalInconsistency("target eigenspace escapes the unmatched span")
    for step in grassmann_path(cur.eigenspaces[r], goal, ambient)[1:]:
        _claim_step(verts, types, r, step, active)


def _claim_step(verts, types, r, step, active):
    """One subspace step of the moving eigenspace, realized as edges.

    The direction the step adds beyond the current eigenspace lies in the
    span of the other unmatched eigenspaces; pair rotations gather it into
    the highest-index carrier, then a single pair move installs the step.
    """
    cur = verts[-1]
    tol = cur.tol
    current_r = cur.eigenspaces[r]
    resid = step.frame - current_r.frame @ (current_r.frame.conj().T @ step.frame)
    u, s, _ = np.linalg.svd(resid)
    if s[0] < tol.angle_abs:
        return  # step already inside the current eigenspace
    v = u[:, 0]

    def component(space: Subspace) -> float:
        return float(np.linalg.norm(space.frame.conj().T @ v))

    carriers = sorted(
        t for t in active if t != r and component(cur.eigenspaces[t]) > 1e-9
    )
    if not carriers:
        raise InternalInconsistency("step direction has no carrier eigenspace")
    q = carriers[-1]
    for t in carriers[:-1]:
        cur = verts[-1]
        et, eq = cur.eigenspaces[t], cur.eigenspaces[q]
        w = et.frame @ (et.frame.conj().T @ v) + eq.frame @ (eq.frame.conj().T @ v)
        w = w / np.linalg.norm(w)
        new_q = _rotated_to_contain(eq, w)
        new_t = complement(new_q, within=subspace_sum(et, eq))
        verts.append(cur.replace_eigenspaces({q: new_q, t: new_t}))
        types.append((min(t, q), max(t, q)))
    cur = verts[-1]
    span = subspace_sum(cur.eigenspaces[q], cur.eigenspaces[r])
    new_q = complement(step, within=span)
    verts.append(cur.replace_eigenspaces({r: step, q: new_q}))
    types.append((min(q, r), max(q, r)))


def _rotated_to_contain(space: Subspace, v: np.ndarray) -> Subspace:
    """Same-dimensional rotation of ``space`` containing the direction
    ``v`` (assumed outside ``space``): the principal direction closest to
    ``v`` is replaced, the rest of the space is kept."""
    w = space.frame @ (space.frame.conj().T @ v)
    norm = np.linalg.norm(w)
    u = space.frame[:, 0] if norm < space.tol.angle_abs else w / norm
    kept = complement(
        Subspace(u[:, None], space.tol), within=space
    )
    vn = v / np.linalg.norm(v)
    return Subspace(np.column_stack([vn, *kept.frame.T]), space.tol)


def reduced_signature(sig: ClassSignature, i: int, j: int, m: int) -> ClassSignature:
    """Signature with ``m`` dimensions moved from the i-th eigenspace onto
    the j-th; moving all of them removes the i-th eigenvalue entirely."""
    _check_pair(sig.k, i, j)
    if not 1 <= m <= sig.multiplicities[i]:
        raise BadIndices(
            f"can move 1..{sig.multiplicities[i]} dimensions from index {i}, got {m}"
        )
    eig = list(sig.eigenvalues)
    mult = list(sig.multiplicities)
    mult[j] += m
    if m < sig.multiplicities[i]:
        mult[i] -= m
    else:
        del eig[i]
        del mult[i]
    return ClassSignature(tuple(eig), tuple(mult), sig.ambient_dim)


@dataclass(frozen=True, eq=False)
class ComponentDescriptor:
    """An (i,j)-connected component, named by a base operator in the fully
    merged reduced class.

    ``merged_pair`` uses parent-signature indices; the base carries the
    merged eigenspace on the parent's j-th eigenvalue and pins every other
    eigenspace.  Two operators have equal descriptors exactly when they
    are (i,j)-connected.
    """

    parent_signature: ClassSignature
    merged_pair: tuple[int, int]
    base: SpectralOperator

    def merged_space(self) -> Subspace:
        value = self.parent_signature.eigenvalues[self.merged_pair[1]]
        return self.base.eigenspace_for(value)

    def pinned(self) -> dict[int, Subspace]:
        out = {}
        for t, value in enumerate(self.parent_signature.eigenvalues):
            if t not in self.merged_pair:
                out[t] = self.base.eigenspace_for(value)
        return out

    def same_component(self, other: "ComponentDescriptor") -> bool:
        if self.parent_signature != other.parent_signature:
            return False
        if set(self.merged_pair) != set(other.merged_pair):
            return False
        if not same_subspace(self.merged_space(), other.merged_space()):
            return False
        theirs = other.pinned()
        return all(same_subspace(s, theirs[t]) for t, s in self.pinned().items())


def component_of(op: SpectralOperator, i: int, j: int) -> ComponentDescriptor:
    """Descriptor of the (i,j)-connected component containing ``op``."""
    _check_pair(op.k, i, j)
    sig = op.signature
    reduced = reduced_signature(sig, i, j, sig.multiplicities[i])
    merged = subspace_sum(op.eigenspaces[i], op.eigenspaces[j])
    frames = []
    for value in reduced.eigenvalues:
        if value == sig.eigenvalues[j]:
            frames.append(merged)
        else:
            frames.append(op.eigenspace_for(value))
    return ComponentDescriptor(sig, (i, j), make_operator(reduced, frames))


def component_contains(desc: ComponentDescriptor, op: SpectralOperator) -> bool:
    """Membership test against the descriptor's constraints."""
    if op.signature != desc.parent_signature:
        return False
    i, j = desc.merged_pair
    span = subspace_sum(op.eigenspaces[i], op.eigenspaces[j])
    if not same_subspace(span, desc.merged_space()):
        return False
    return all(
        same_subspace(op.eigenspaces[t], s) for t, s in desc.pinned().items()
    )


def component_member(desc: ComponentDescriptor, space: Subspace) -> SpectralOperator:
    """The member whose i-th eigenspace is ``space``; the j-th eigenspace
    is the complement of ``space`` inside the merged space."""
    i, j = desc.merged_pair
    sig = desc.parent_signature
    if space.dim != sig.multiplicities[i]:
        raise DimensionMismatch(
            f"member eigenspace must have dimension {sig.multiplicities[i]}"
        )
    merged = desc.merged_space()
    if not contains(merged, space):
        raise NotContained("eigenspace must lie inside the merged space")
    frames = []
    for t, value in enumerate(sig.eigenvalues):
        if t == i:
            frames.append(space)
        elif t == j:
            frames.append(complement(space, within=merged))
        else:
            frames.append(desc.pinned()[t])
    return make_operator(sig, frames)


def random_component_member(
    desc: ComponentDescriptor, rng: np.random.Generator
) -> SpectralOperator:
    """Member with a Haar-style random i-th eigenspace inside the merged
    space."""
    i, _ = desc.merged_pair
    m = desc.parent_signature.multiplicities[i]
    merged = desc.merged_space()
    g = rng.standard_normal((merged.dim, m)) + 1j * rng.standard_normal((merged.dim, m))
    return component_member(desc, orthonormalize(merged.frame @ g, desc.base.tol))


@dataclass(frozen=True)
class ComponentAdjacency:
    """Outcome of the component-level adjacency test.

    ``kind`` is one of ``not_adjacent``, ``adjacent`` (same family,
    infinitely many witness pairs, one constructed), ``intersecting``
    (a single shared member) or ``unique_bridge`` (disjoint components
    joined by exactly one adjacent pair).
    """

    kind: str
    witness: tuple[SpectralOperator, SpectralOperator] | None = None
    common: SpectralOperator | None = None


def _flip_orientation(desc: ComponentDescriptor) -> ComponentDescriptor:
    """Descriptor of the same component with the merged pair reversed:
    the merged space switches to carrying the other eigenvalue."""
    i, j = desc.merged_pair
    sig = desc.parent_signature
    reduced = reduced_signature(sig, j, i, sig.multiplicities[j])
    merged = desc.merged_space()
    frames = []
    for value in reduced.eigenvalues:
        if value == sig.eigenvalues[i]:
            frames.append(merged)
        else:
            frames.append(desc.base.eigenspace_for(value))
    return ComponentDescriptor(sig, (j, i), make_operator(reduced, frames))


def components_adjacent(
    d1: ComponentDescriptor, d2: ComponentDescriptor
) -> ComponentAdjacency:
    """Component-level adjacency with witnesses.

    Same family: the components are adjacent exactly when their bases
    are, and a witness pair sharing one eigenspace is constructed and
    validated.  Different families: either the components share a single
    member, or at most one adjacent pair bridges them; the bridge is
    assembled from the descriptors' eigenspace constraints and validated.
    """
    if d1.parent_signature != d2.parent_signature:
        raise ClassMismatch("descriptors have different parent signatures")
    if d1.same_component(d2):
        raise PreconditionViolated("descriptors describe the same component")

    if set(d1.merged_pair) == set(d2.merged_pair):
        if d1.merged_pair != d2.merged_pair:
            d2 = _flip_orientation(d2)
        return _same_family_adjacency(d1, d2)

    common = _common_member(d1, d2)
    if common is not None:
        return ComponentAdjacency("intersecting", common=common)
    for u in d1.merged_pair:
        for w in d2.merged_pair:
            if u == w:
                continue
            if {u, w} in (set(d1.merged_pair), set(d2.merged_pair)):
                continue
            pair = _bridge_candidate(d1, d2, u, w)
            if pair is not None:
                return ComponentAdjacency("unique_bridge", witness=pair)
    return ComponentAdjacency("not_adjacent")


def _same_family_adjacency(d1, d2) -> ComponentAdjacency:
    i, j = d1.merged_pair
    n_i = d1.parent_signature.multiplicities[i]
    base_verdict = is_adjacent(d1.base, d2.base)
    if not base_verdict.adjacent:
        return ComponentAdjacency("not_adjacent")
    m1, m2 = d1.merged_space(), d2.merged_space()
    if same_subspace(m1, m2):
        shared = Subspace(m1.frame[:, :n_i], d1.base.tol)
    else:
        overlap = intersect(m1, m2)
        if overlap.dim < n_i:
            raise InternalInconsistency(
                "adjacent merged spaces overlap in fewer dimensions than a member needs"
            )
        shared = Subspace(overlap.frame[:, :n_i], d1.base.tol)
    a = component_member(d1, shared)
    b = component_member(d2, shared)
    if not is_adjacent(a, b).adjacent:
        raise InternalInconsistency("witness construction produced a non-adjacent pair")
    return ComponentAdjacency("adjacent", witness=(a, b))


def _common_member(d1, d2) -> SpectralOperator | None:
    """The single operator in both components, when it exists."""
    sig = d1.parent_signature
    set1, set2 = set(d1.merged_pair), set(d2.merged_pair)
    pins1, pins2 = d1.pinned(), d2.pinned()
    frames: dict[int, Subspace] = {}
    for t in range(sig.k):
        have1, have2 = t in pins1, t in pins2
        if have1 and have2:
            if not same_subspace(pins1[t], pins2[t]):
                return None
            frames[t] = pins1[t]
        elif have1:
            frames[t] = pins1[t]
        elif have2:
            frames[t] = pins2[t]
    shared = set1 & set2
    for f in shared:
        overlap = intersect(d1.merged_space(), d2.merged_space())
        if overlap.dim != sig.multiplicities[f]:
            return None
        frames[f] = overlap
    if len(frames) != sig.k:
        return None
    try:
        candidate = make_operator(sig, [frames[t] for t in range(sig.k)])
    except Exception:
        return None
    if component_contains(d1, candidate) and component_contains(d2, candidate):
        return candidate
    return None


def _bridge_candidate(d1, d2, u, w):
    """Pair (A in d1, B in d2) adjacent with type {u, w}, or None.

    A is pinned off d1's merged pair, B off d2's; off-edge eigenspaces
    must agree, a shared merged index resolves to the intersection of the
    two merged spaces, and the last unknown in each operator is the
    complement of its partner inside the merged space.
    """
    sig = d1.parent_signature
    pins_a, pins_b = dict(d1.pinned()), dict(d2.pinned())
    edge = {u, w}
    set1, set2 = set(d1.merged_pair), set(d2.merged_pair)
    for f in (set1 & set2) - edge:
        overlap = intersect(d1.merged_space(), d2.merged_space())
        if overlap.dim != sig.multiplicities[f]:
            return None
        pins_a[f] = overlap
        pins_b[f] = overlap
    for t in range(sig.k):
        if t in edge:
            continue
        in_a, in_b = t in pins_a, t in pins_b
        if in_a and in_b:
            if not same_subspace(pins_a[t], pins_b[t]):
                return None
        elif in_a:
            pins_b[t] = pins_a[t]
        elif in_b:
            pins_a[t] = pins_b[t]
        else:
            return None
    for desc, pins in ((d1, pins_a), (d2, pins_b)):
        missing = [t for t in desc.merged_pair if t not in pins]
        if len(missing) != 1:
            if missing:
                return None
            continue
        t = missing[0]
        other = desc.merged_pair[0] if desc.merged_pair[1] == t else desc.merged_pair[1]
        if not contains(desc.merged_space(), pins[other]):
            return None
        pins[t] = complement(pins[other], within=desc.merged_space())
    try:
        a = make_operator(sig, [pins_a[t] for t in range(sig.k)])
        b = make_operator(sig, [pins_b[t] for t in range(sig.k)])
    except Exception:
        return None
    if not (component_contains(d1, a) and component_contains(d2, b)):
        return None
    verdict = is_adjacent(a, b)
    if verdict.adjacent and verdict.type_pair == (min(u, w), max(u, w)):
        return a, b
    return None

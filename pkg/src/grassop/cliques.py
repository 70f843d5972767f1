"""Cliques and lines of the adjacency graph.

A clique descriptor names the set of all operators obtained from a base
operator by splitting one dimension off its enlarged eigenspace; the
member set is never materialized (it is a continuum).  Any two distinct
members are adjacent with one fixed type.  Orientation matters: the
member eigenspaces at the first index of the oriented pair share a common
codimension-one core (star side), those at the second index live inside a
common enlarged space (top side).

Intersections of two cliques are computed at descriptor level and fall
into the trichotomy empty / one operator / line; chains of cliques with
consecutive line intersections realize the classical clique-connectivity
of a component.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adjacency import is_adjacent
from .connectivity import ComponentDescriptor, reduced_signature
from .errors import (
    AmbiguousOrientation,
    ClassMismatch,
    DifferentComponents,
    DimensionMismatch,
    InternalInconsistency,
    MultiplicityTooSmall,
    NotAClique,
    NotAdjacent,
    NotContained,
    NotMutuallyAdjacent,
    SignatureMismatch,
)
from .operators import (
    ClassSignature,
    SpectralOperator,
    align_to,
    make_operator,
    operators_equal,
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
    zero_subspace,
)

__all__ = [
    "CliqueDescriptor",
    "LineDescriptor",
    "CliqueIntersection",
    "star_clique",
    "clique_member",
    "clique_contains",
    "random_clique_member",
    "triangle_type",
    "classify_clique",
    "line_through",
    "line_member",
    "line_contains",
    "random_line_member",
    "clique_intersection",
    "clique_chain",
]


@dataclass(frozen=True, eq=False)
class CliqueDescriptor:
    """A clique named by a base operator with one dimension moved from the
    first index of ``oriented_pair`` onto the second.

    Members are ``base + (a_i - a_j) P_X`` for lines X inside the base's
    enlarged j-th eigenspace.  With a first-index multiplicity of one in
    the parent class, the base does not carry the i-th eigenvalue at all;
    such cliques are representable but are whole connected components, not
    maximal cliques, and orientation claims about them are refused.
    """

    parent_signature: ClassSignature
    oriented_pair: tuple[int, int]
    base: SpectralOperator

    @property
    def pair(self) -> tuple[int, int]:
        return self.oriented_pair

    def core_space(self) -> Subspace:
        """Base eigenspace at the shrunken index (zero subspace when the
        parent multiplicity there is one)."""
        i = self.oriented_pair[0]
        sig = self.parent_signature
        if sig.multiplicities[i] == 1:
            return zero_subspace(sig.ambient_dim, self.base.tol)
        return self.base.eigenspace_for(sig.eigenvalues[i])

    def enlarged_space(self) -> Subspace:
        """Base eigenspace at the grown index (dimension n_j + 1)."""
        j = self.oriented_pair[1]
        return self.base.eigenspace_for(self.parent_signature.eigenvalues[j])

    def merged_span(self) -> Subspace:
        return subspace_sum(self.core_space(), self.enlarged_space())

    def pinned(self) -> dict[int, Subspace]:
        out = {}
        for t, value in enumerate(self.parent_signature.eigenvalues):
            if t not in self.oriented_pair:
                out[t] = self.base.eigenspace_for(value)
        return out

    def same_clique(self, other: "CliqueDescriptor") -> bool:
        """Equality of member sets."""
        if self.parent_signature != other.parent_signature:
            return False
        if set(self.oriented_pair) != set(other.oriented_pair):
            return False
        if self.oriented_pair == other.oriented_pair:
            return operators_equal(self.base, other.base)
        # opposite orientations describe one set only in the doubly
        # degenerate regime where both multiplicities are one
        i, j = self.oriented_pair
        d = self.parent_signature.multiplicities
        if d[i] != 1 or d[j] != 1:
            return False
        theirs = other.pinned()
        return same_subspace(
            self.enlarged_space(), other.enlarged_space()
        ) and all(same_subspace(s, theirs[t]) for t, s in self.pinned().items())


def star_clique(
    base: SpectralOperator,
    i: int,
    j: int,
    parent: ClassSignature | None = None,
) -> CliqueDescriptor:
    """Descriptor of the clique generated by ``base``.

    ``i`` and ``j`` index the parent signature.  When ``parent`` is not
    given it is inferred by moving one dimension back from ``j`` to ``i``,
    which requires the i-th eigenvalue to still be present in the base's
    signature; pass ``parent`` explicitly for first-index multiplicity
    one.
    """
    if parent is None:
        sig = base.signature
        if not (0 <= i < sig.k and 0 <= j < sig.k) or i == j:
            raise SignatureMismatch(
                "cannot infer the parent class: indices do not address the "
                "base signature; pass the parent signature explicitly"
            )
        if sig.multiplicities[j] < 2:
            raise SignatureMismatch("grown index must have multiplicity at least 2")
        mult = list(sig.multiplicities)
        mult[i] += 1
        mult[j] -= 1
        parent = ClassSignature(sig.eigenvalues, tuple(mult), sig.ambient_dim)
    expected = reduced_signature(parent, i, j, 1)
    if base.signature != expected:
        raise SignatureMismatch(
            f"base signature {base.signature} is not the parent reduced at ({i}, {j})"
        )
    return CliqueDescriptor(parent, (i, j), base)


def clique_member(desc: CliqueDescriptor, line: Subspace) -> SpectralOperator:
    """The member whose eigenspace at the first pair index is the core
    plus ``line``; ``line`` must be one-dimensional inside the enlarged
    space."""
    sig = desc.parent_signature
    i, j = desc.oriented_pair
    if line.dim != 1:
        raise DimensionMismatch("a member is named by a one-dimensional subspace")
    enlarged = desc.enlarged_space()
    if not contains(enlarged, line):
        raise NotContained("the defining line must lie inside the enlarged eigenspace")
    pins = desc.pinned()
    frames = []
    for t in range(sig.k):
        if t == i:
            frames.append(subspace_sum(desc.core_space(), line))
        elif t == j:
            frames.append(complement(line, within=enlarged))
        else:
            frames.append(pins[t])
    return make_operator(sig, frames)


def clique_contains(desc: CliqueDescriptor, op: SpectralOperator) -> bool:
    if op.signature != desc.parent_signature:
        return False
    i, j = desc.oriented_pair
    pins = desc.pinned()
    if not all(same_subspace(op.eigenspaces[t], s) for t, s in pins.items()):
        return False
    core = desc.core_space()
    if core.dim and not contains(op.eigenspaces[i], core):
        return False
    return contains(desc.enlarged_space(), op.eigenspaces[j])


def random_clique_member(
    desc: CliqueDescriptor, rng: np.random.Generator
) -> SpectralOperator:
    enlarged = desc.enlarged_space()
    g = rng.standard_normal(enlarged.dim) + 1j * rng.standard_normal(enlarged.dim)
    line = orthonormalize(enlarged.frame @ g, desc.base.tol)
    return clique_member(desc, line)


def triangle_type(
    a: SpectralOperator, b: SpectralOperator, c: SpectralOperator
) -> tuple[int, int]:
    """The single type pair shared by three mutually adjacent operators.

    Disagreeing pairwise types would refute the triangle property and are
    surfaced as InternalInconsistency.
    """
    verdicts = [is_adjacent(a, b), is_adjacent(a, c), is_adjacent(b, c)]
    if not all(v.adjacent for v in verdicts):
        raise NotMutuallyAdjacent("all three pairs must be adjacent")
    types = {v.type_pair for v in verdicts}
    if len(types) != 1:
        raise InternalInconsistency(
            f"mutually adjacent triple carries several types: {sorted(types)}"
        )
    return types.pop()


def classify_clique(
    ops,
) -> tuple[tuple[int, int], str, CliqueDescriptor]:
    """Common type, star/top orientation, and the containing descriptor.

    The star test (all eigenspaces at the first index share a
    codimension-one core) is tried before the top test; members of a
    single line satisfy both and classify as a star.  Orientation is
    refused when either multiplicity of the common pair is one.
    """
    ops = list(ops)
    if len(ops) < 2:
        raise NotAClique("need at least three operators")
    if len(ops) == 2:
        raise AmbiguousOrientation(
            "a single edge lies on both a star and a top; give at least three operators"
        )
    first = ops[0]
    ops = [first] + [align_to(first, op) for op in ops[1:]]
    types = set()
    for s in range(len(ops)):
        for t in range(s + 1, len(ops)):
            verdict = is_adjacent(ops[s], ops[t])
            if not verdict.adjacent:
                raise NotAClique(f"operators {s} and {t} are not adjacent")
            types.add(verdict.type_pair)
    if len(types) != 1:
        raise InternalInconsistency(
            f"pairwise adjacent family carries several types: {sorted(types)}"
        )
    i, j = types.pop()
    sig = first.signature
    n_i, n_j = sig.multiplicities[i], sig.multiplicities[j]
    if min(n_i, n_j) == 1:
        raise AmbiguousOrientation(
            "orientation is undefined when a multiplicity of the common pair is one"
        )
    span = subspace_sum(first.eigenspaces[i], first.eigenspaces[j])
    pins = {
        t: first.eigenspaces[t] for t in range(sig.k) if t not in (i, j)
    }

    core = ops[0].eigenspaces[i]
    for op in ops[1:]:
        core = intersect(core, op.eigenspaces[i])
    if core.dim == n_i - 1:
        desc = _descriptor_from_parts(sig, (i, j), core, span, pins)
        if all(clique_contains(desc, op) for op in ops):
            return (i, j), "star", desc

    hull = ops[0].eigenspaces[i]
    for op in ops[1:]:
        hull = subspace_sum(hull, op.eigenspaces[i])
    if hull.dim == n_i + 1:
        top_core = complement(hull, within=span)
        desc = _descriptor_from_parts(sig, (j, i), top_core, span, pins)
        if all(clique_contains(desc, op) for op in ops):
            return (i, j), "top", desc
    raise NotAClique("the family fits neither a star nor a top")


def _descriptor_from_parts(
    sig: ClassSignature,
    oriented_pair: tuple[int, int],
    core: Subspace,
    span: Subspace,
    pins: dict[int, Subspace],
) -> CliqueDescriptor:
    """Clique descriptor with the given shrunken-index core inside the
    given merged span; the enlarged eigenspace is the complement."""
    i, j = oriented_pair
    reduced = reduced_signature(sig, i, j, 1)
    frames = []
    for value in reduced.eigenvalues:
        if value == sig.eigenvalues[j]:
            frames.append(complement(core, within=span))
        elif value == sig.eigenvalues[i]:
            frames.append(core)
        else:
            frames.append(pins[sig.index_of(value)])
    return CliqueDescriptor(sig, oriented_pair, make_operator(reduced, frames))


@dataclass(frozen=True, eq=False)
class LineDescriptor:
    """The intersection of a star-oriented and a top-oriented clique whose
    bases differ by a weighted projector onto a plane.

    Members correspond to the lines of that two-dimensional plane: the
    eigenspace at the first pair index runs between the star core and the
    top hull.
    """

    parent_signature: ClassSignature
    pair: tuple[int, int]
    star_base: SpectralOperator
    top_base: SpectralOperator

    def star(self) -> CliqueDescriptor:
        return CliqueDescriptor(self.parent_signature, self.pair, self.star_base)

    def top(self) -> CliqueDescriptor:
        return CliqueDescriptor(
            self.parent_signature, (self.pair[1], self.pair[0]), self.top_base
        )

    def plane(self) -> Subspace:
        """The two-dimensional space the member lines run through."""
        return complement(self.star().core_space(), within=self.top().enlarged_space())


def _make_line(
    star: CliqueDescriptor, top: CliqueDescriptor
) -> LineDescriptor:
    """Assemble and validate a line from compatible star and top cliques:
    the bases must differ by (a_i - a_j) times a rank-two projector."""
    i, j = star.oriented_pair
    sig = star.parent_signature
    delta = top.base.matrix - star.base.matrix
    weight = abs(sig.eigenvalues[i] - sig.eigenvalues[j])
    sv = np.linalg.svd(delta, compute_uv=False)
    ok = (
        abs(sv[0] - weight) < 1e-8 * max(1.0, weight)
        and abs(sv[1] - weight) < 1e-8 * max(1.0, weight)
        and (len(sv) < 3 or sv[2] < 1e-8 * max(1.0, weight))
    )
    if not ok:
        raise InternalInconsistency(
            "star and top bases do not differ by a weighted plane projector"
        )
    return LineDescriptor(sig, (i, j), star.base, top.base)


def line_through(a: SpectralOperator, b: SpectralOperator) -> LineDescriptor:
    """The unique line containing an adjacent pair.

    Requires both multiplicities of the adjacency type to exceed one; the
    star core is the intersection of the moving eigenspaces, the top hull
    their sum.
    """
    b = align_to(a, b)
    verdict = is_adjacent(a, b)
    if not verdict.adjacent:
        raise NotAdjacent("a line is spanned by an adjacent pair")
    i, j = verdict.type_pair
    sig = a.signature
    if min(sig.multiplicities[i], sig.multiplicities[j]) < 2:
        raise MultiplicityTooSmall(
            "line structure requires both multiplicities above one"
        )
    span = subspace_sum(a.eigenspaces[i], a.eigenspaces[j])
    pins = {t: a.eigenspaces[t] for t in range(sig.k) if t not in (i, j)}
    star_core = intersect(a.eigenspaces[i], b.eigenspaces[i])
    star = _descriptor_from_parts(sig, (i, j), star_core, span, pins)
    top_core = intersect(a.eigenspaces[j], b.eigenspaces[j])
    top = _descriptor_from_parts(sig, (j, i), top_core, span, pins)
    return _make_line(star, top)


def line_member(line: LineDescriptor, direction: Subspace) -> SpectralOperator:
    """Member named by a one-dimensional subspace of the line's plane."""
    if not contains(line.plane(), direction):
        raise NotContained("the direction must lie inside the line's plane")
    return clique_member(line.star(), direction)


def line_contains(line: LineDescriptor, op: SpectralOperator) -> bool:
    return clique_contains(line.star(), op) and clique_contains(line.top(), op)


def random_line_member(
    line: LineDescriptor, rng: np.random.Generator
) -> SpectralOperator:
    plane = line.plane()
    g = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    direction = orthonormalize(plane.frame @ g, line.star_base.tol)
    return line_member(line, direction)


@dataclass(frozen=True)
class CliqueIntersection:
    """Trichotomy outcome: ``equal``, ``line``, ``singleton`` or ``empty``."""

    kind: str
    line: LineDescriptor | None = None
    operator: SpectralOperator | None = None


def clique_intersection(
    d1: CliqueDescriptor, d2: CliqueDescriptor
) -> CliqueIntersection:
    """Descriptor-level intersection of two cliques of one parent class.

    Computed without enumerating members: equal descriptors, a line
    (star/top pair around a plane), a single forced operator, or empty.
    Refused in the degenerate regime where a touched multiplicity is one,
    where the trichotomy does not hold.
    """
    if d1.parent_signature != d2.parent_signature:
        raise ClassMismatch("descriptors have different parent signatures")
    d = d1.parent_signature.multiplicities
    for desc in (d1, d2):
        if min(d[desc.oriented_pair[0]], d[desc.oriented_pair[1]]) == 1:
            raise MultiplicityTooSmall(
                "intersection trichotomy requires multiplicities above one"
            )
    if set(d1.oriented_pair) == set(d2.oriented_pair):
        if d1.oriented_pair == d2.oriented_pair:
            return _same_orientation_intersection(d1, d2)
        return _opposite_orientation_intersection(d1, d2)
    return _different_pair_intersection(d1, d2)


def _same_orientation_intersection(d1, d2) -> CliqueIntersection:
    if operators_equal(d1.base, d2.base):
        return CliqueIntersection("equal")
    pins1, pins2 = d1.pinned(), d2.pinned()
    if not all(same_subspace(s, pins2[t]) for t, s in pins1.items()):
        return CliqueIntersection("empty")
    if not same_subspace(d1.merged_span(), d2.merged_span()):
        return CliqueIntersection("empty")
    # two stars meet in the single member holding both cores
    joint = subspace_sum(d1.core_space(), d2.core_space())
    i = d1.oriented_pair[0]
    if joint.dim != d1.parent_signature.multiplicities[i]:
        return CliqueIntersection("empty")
    extra = complement(d1.core_space(), within=joint)
    try:
        candidate = clique_member(d1, extra)
    except (NotContained, DimensionMismatch):
        return CliqueIntersection("empty")
    if clique_contains(d2, candidate):
        return CliqueIntersection("singleton", operator=candidate)
    return CliqueIntersection("empty")


def _opposite_orientation_intersection(d1, d2) -> CliqueIntersection:
    # d1 plays the star role in its own first-index coordinates, d2 the
    # top role there; a line requires d1's core inside d2's hull
    star, top = d1, d2
    pins1, pins2 = star.pinned(), top.pinned()
    if not all(same_subspace(s, pins2[t]) for t, s in pins1.items()):
        return CliqueIntersection("empty")
    if not same_subspace(star.merged_span(), top.merged_span()):
        return CliqueIntersection("empty")
    hull = top.enlarged_space()
    if not contains(hull, star.core_space()):
        return CliqueIntersection("empty")
    return CliqueIntersection("line", line=_make_line(star, top))


def _different_pair_intersection(d1, d2) -> CliqueIntersection:
    sig = d1.parent_signature
    pins1, pins2 = d1.pinned(), d2.pinned()
    frames: dict[int, Subspace] = {}
    for t in range(sig.k):
        in1, in2 = t in pins1, t in pins2
        if in1 and in2:
            if not same_subspace(pins1[t], pins2[t]):
                return CliqueIntersection("empty")
            frames[t] = pins1[t]
        elif in1:
            frames[t] = pins1[t]
        elif in2:
            frames[t] = pins2[t]
    missing = [t for t in range(sig.k) if t not in frames]
    if len(missing) == 1:
        f = missing[0]
        assigned = np.hstack([frames[t].frame for t in range(sig.k) if t != f])
        rest = complement(orthonormalize(assigned, d1.base.tol))
        if rest.dim != sig.multiplicities[f]:
            return CliqueIntersection("empty")
        frames[f] = rest
    elif missing:
        return CliqueIntersection("empty")
    try:
        candidate = make_operator(sig, [frames[t] for t in range(sig.k)])
    except Exception:
        return CliqueIntersection("empty")
    if clique_contains(d1, candidate) and clique_contains(d2, candidate):
        return CliqueIntersection("singleton", operator=candidate)
    return CliqueIntersection("empty")


def _clique_in_component(desc: CliqueDescriptor, comp: ComponentDescriptor) -> bool:
    if desc.parent_signature != comp.parent_signature:
        return False
    if set(desc.oriented_pair) != set(comp.merged_pair):
        return False
    comp_pins = comp.pinned()
    if not all(
        same_subspace(s, comp_pins[t]) for t, s in desc.pinned().items()
    ):
        return False
    return same_subspace(desc.merged_span(), comp.merged_space())


def clique_chain(
    d1: CliqueDescriptor,
    d2: CliqueDescriptor,
    component: ComponentDescriptor,
) -> list[CliqueDescriptor]:
    """Chain of cliques from ``d1`` to ``d2`` inside one component, with
    every consecutive intersection a line.

    A vertex path inside the component supplies alternating star and top
    cliques around its edges; the endpoints replace the redundant first
    or last element depending on their orientation.  The chain is
    validated before being returned.
    """
    sig = d1.parent_signature
    i, j = component.merged_pair
    d = sig.multiplicities
    if min(d[i], d[j]) == 1:
        raise MultiplicityTooSmall("chains require both multiplicities above one")
    if not (_clique_in_component(d1, component) and _clique_in_component(d2, component)):
        raise DifferentComponents("cliques do not lie inside the given component")
    if d1.same_clique(d2):
        return [d1]
    if clique_intersection(d1, d2).kind == "line":
        return [d1, d2]

    span = component.merged_space()
    pins = component.pinned()

    def star_of(core):
        return _descriptor_from_parts(sig, (i, j), core, span, pins)

    def top_of(hull):
        return _descriptor_from_parts(
            sig, (j, i), complement(hull, within=span), span, pins
        )

    def anchor(desc):
        # one member's eigenspace at index i, read off the descriptor
        if desc.oriented_pair == (i, j):
            extra = Subspace(desc.enlarged_space().frame[:, :1], desc.base.tol)
            return subspace_sum(desc.core_space(), extra)
        hull = desc.enlarged_space()
        return Subspace(hull.frame[:, : d[i]], desc.base.tol)

    z_start, z_end = anchor(d1), anchor(d2)
    if same_subspace(z_start, z_end):
        # shared vertex with equal orientations (opposite orientations
        # through one vertex already intersect in a line): bridge with one
        # clique of the opposite kind through that vertex
        if d1.oriented_pair == (i, j):
            direction = complement(z_start, within=span).frame[:, :1]
            mid = top_of(subspace_sum(z_start, Subspace(direction, d1.base.tol)))
        else:
            mid = star_of(Subspace(z_start.frame[:, : d[i] - 1], d1.base.tol))
        chain = [d1, mid, d2]
    else:
        steps = grassmann_path(z_start, z_end, span)
        middles = []
        for a, b in zip(steps, steps[1:]):
            middles.append(star_of(intersect(a, b)))
            middles.append(top_of(subspace_sum(a, b)))
        if d1.oriented_pair == (i, j):
            middles = middles[1:]  # a star endpoint meets the first top directly
        if d2.oriented_pair == (j, i):
            middles = middles[:-1]  # a top endpoint meets the last star directly
        if not middles:
            # both trims fired on a one-edge path: rebuild the alternation
            middles = [
                top_of(subspace_sum(z_start, z_end)),
                star_of(Subspace(z_end.frame[:, : d[i] - 1], d1.base.tol)),
            ]
        chain = [d1, *middles, d2]
    for a, b in zip(chain, chain[1:]):
        if clique_intersection(a, b).kind != "line":
            raise InternalInconsistency("chain link does not intersect in a line")
    return chain

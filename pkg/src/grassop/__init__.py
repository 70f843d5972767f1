"""Numerical laboratory for adjacency graphs on conjugacy classes of
finite-rank Hermitian operators: spectral construction, the rank-two
invariant-image adjacency relation, constructive connectivity, clique and
line classification, and the graph's unitary/anti-unitary symmetries."""

from .subspaces import (
    DEFAULT_TOL,
    Subspace,
    Tolerance,
    complement,
    contains,
    full_space,
    grassmann_path,
    intersect,
    numerical_rank,
    orthonormalize,
    principal_angles,
    same_subspace,
    subspace_sum,
    subspaces_adjacent,
    zero_subspace,
)
from .operators import (
    ClassSignature,
    Permutation,
    SpectralOperator,
    align_to,
    apply_permutation,
    from_matrix,
    make_operator,
    operator_image,
    operators_equal,
    random_operator,
    same_class,
    sd_group,
    to_matrix,
)
from .adjacency import (
    AdjacencyVerdict,
    adjacency_oracle,
    classify_adjacency,
    condition_a1,
    condition_a2,
    image_direct_sum_check,
    image_relation,
    is_adjacent,
    make_ij_adjacent,
    pseudo_adjacent_c3,
    pseudo_adjacent_general,
)
from .connectivity import (
    ComponentAdjacency,
    ComponentDescriptor,
    OperatorPath,
    component_contains,
    component_member,
    component_of,
    components_adjacent,
    connect,
    ij_connected,
    ij_path,
    random_component_member,
    reduced_signature,
    validate_path,
)
from .cliques import (
    CliqueDescriptor,
    CliqueIntersection,
    LineDescriptor,
    classify_clique,
    clique_chain,
    clique_contains,
    clique_intersection,
    clique_member,
    line_contains,
    line_member,
    line_through,
    random_clique_member,
    random_line_member,
    star_clique,
    triangle_type,
)
from .symmetry import (
    AutomorphismReport,
    SemilinearMap,
    Symmetry,
    adjacency_type_transport,
    apply_symmetry,
    commutation_check,
    compose,
    identity_symmetry,
    inverse,
    orthogonality_defect,
    semilinear_k2_automorphism,
    verify_automorphism,
)
from .serialization import deserialize_operator, serialize_operator
from .suite import DEFAULT_SEED, SuiteConfig, SuiteReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"

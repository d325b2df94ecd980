"""Finite groups, subgroup lattices, and planarity of subgroup graphs."""

from .classify import (
    FamilyTag,
    InfiniteFamilySpec,
    classify,
    predicted_outerplanar,
    predicted_planar,
    tarski_truncation_graph,
    truncate_infinite_family,
)
from .errors import (
    GroupConstructionError,
    InvalidParameters,
    InvalidPermutation,
    LatplanError,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    NotPlanarGroup,
    OrderCapExceeded,
)
from .families import (
    Cyclic,
    Dihedral,
    FamilySpec,
    FrobeniusP2Q,
    GeneralizedQuaternion,
    MetacyclicPQ,
    Modular,
    Semidihedral16,
    construct_family,
    parse_family_spec,
)
from .graphs import (
    GraphMetrics,
    SimpleGraph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_dot,
    graph_metrics,
    path_graph,
    to_dot,
)
from .groups import (
    FiniteGroup,
    GroupInvariants,
    Subgroup,
    abelian_invariants,
    are_isomorphic,
    centralizer_of_subgroup,
    conjugacy_classes,
    direct_product,
    from_cayley_table,
    from_permutations,
    generated_subgroup,
    invariants,
    is_nilpotent,
    min_generators,
)
from .lattice import (
    SubgroupLattice,
    all_subgroups,
    bounded_graph,
    frattini,
    lattice_to_json,
    subgroup_graph,
)
from .planarity import (
    ForbiddenWitness,
    PlanarityVerdict,
    is_hasse_planar,
    is_outerplanar,
    is_planar,
    validate_witness,
)
from .checks import (
    CheckResult,
    CorpusSpec,
    TheoremReport,
    check_chain_corollaries,
    check_engel_bounds,
    check_hasse_status,
    check_k33_configuration,
    check_nested_nonabelian,
    check_planarity_agreement,
    check_product_corollary,
    run_corpus,
)

__version__ = "0.1.0"

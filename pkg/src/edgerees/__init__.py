"""Exact invariants and regularity certificates for Rees algebras of graph
edge ideals: matchings and covers, affine-semigroup membership, squarefree
divisor complexes, reduced simplicial homology, edge-polytope facet systems
and lattice-point counts.
"""

from .graph import (
    Graph,
    NoCoverError,
    cone_graph,
    connected_components,
    cycle_graph,
    disjoint_edges_graph,
    disjoint_union,
    edge_cover_number,
    graph,
    has_perfect_matching,
    induced_matching_number,
    induced_subgraph,
    is_bipartite,
    matching_number,
    odd_cycle_condition,
    path_graph,
    rees_is_normal,
)
from .homology import multigraded_betti, reduced_homology_dims
from .linalg import RATIONALS, PrimeField, Rationals, field_from_string
from .polytope import (
    FacetInequality,
    FacetSystem,
    UnsupportedGraph,
    dilation_points,
    facet_system,
    fundamental_sets,
    polytope_dimension,
    q_zero,
    regular_vertices,
)
from .regularity import (
    BettiTable,
    NotNormalError,
    RegularityReport,
    analyze,
    betti_dominance_check,
    betti_table,
    default_j_max,
    regularity_from_table,
    regularity_normal,
)
from .semigroup import (
    DegreeNotInSemigroup,
    ToricPresentation,
    divisor_complex,
    edge_presentation,
    enumerate_degree,
    in_semigroup,
    membership,
    presentation,
    pure_restriction,
    rees_presentation,
)
from .simplicial import (
    SimplicialComplex,
    boundary_matrix,
    faces_by_dimension,
    simplicial_complex,
)

__version__ = "0.1.0"

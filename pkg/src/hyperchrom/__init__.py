"""Exact chromatic indices of linear hypergraphs and checkable bounds on them."""

from .coloring import (
    EdgeColoring,
    chromatic_index_exact,
    induced_vertex_colors,
    intersection_graph,
    is_proper,
    pair_adjacency_check,
)
from .core import (
    Hypergraph,
    Metrics,
    SimpleGraph,
    check_sandwich,
    metrics,
    star,
    sym_diff_distance,
    two_section,
    validate,
)
from .quotient import (
    bounds_report,
    classify_case,
    clique_condition_check,
    conjecture_report,
    gamma,
    gamma_hypergraph,
    helly_check,
    omega_theta,
    pair_witness,
    pick_pivot,
    sim_partition,
    star_color_hypergraph,
    theorem2_inequality,
    theorem21_check,
)
from .report import analyze
from .symmetry import (
    VertexPermutation,
    automorphisms,
    burnside_average,
    burnside_bound,
    color_preserving_subgroup,
    lift_permutation,
    orbits,
)

__version__ = "0.1.0"

"""Exact computation and verification workbench for bipartite extremal
numbers of trees: closed-form values, lower-bound constructions, and an
exact branch-and-bound solver that confirms them at desk scale."""

__version__ = "0.1.0"

from .graphs import (
    BipartiteGraph,
    CanonicalCode,
    canonical_code,
    is_connected,
    new_graph,
    parse_bgf,
    serialize_bgf,
)
from .patterns import (
    Pattern,
    TreeFamily,
    caterpillar,
    double_star,
    enumerate_trees_by_parts,
    exbc_defined,
    fits_host,
    free_trees,
    parse_target,
    path,
    spider,
    star,
    union_patterns,
)
from .embedding import Embedding, find_embedding, is_family_free, verify_embedding
from .constructions import (
    ConstructionSpec,
    build_construction,
    claimed_edge_count,
    declared_target,
    parse_spec,
)
from .registry import ValueOrBounds, generic_bounds, lookup, witness_graph
from .solver import (
    SolveResult,
    SolverConfig,
    enumerate_extremal,
    solve,
    solve_general,
)
from .maxcut import (
    BalancedCut,
    bipartite_subgraph_from_cut,
    cut_guarantee,
    switch_to_large_cut,
)
from .ratios import (
    RatioParams,
    RatioReport,
    build_ratio_construction,
    finite_ratio,
    gamma_b_witness,
    x0,
)

"""Exact stress centrality for finite simple graphs.

The stress of a vertex is the number of geodesics that pass through it as an
interior vertex.
"""
from .canonical import canonical_form, is_isomorphic
from .closed_forms import (
    SrgParameters,
    corona_hub_stress,
    predict_complete_bipartite,
    predict_complete_bipartite_total,
    predict_corona_hub,
    predict_corona_leaf,
    predict_cycle,
    predict_cycle_total,
    predict_diameter2,
    predict_srg,
    predict_tree_vertex,
    predict_windmill_center,
)
from .errors import *  # noqa: F401,F403
from .formats import parse_graph, parse_graph6, parse_edge_list, parse_adjacency_matrix, to_graph6
from .generators import (
    cocktail_party,
    complete,
    complete_bipartite,
    corona,
    cycle,
    named,
    path,
    power,
    random_connected,
    random_tree,
    star,
    windmill,
)
from .geodesics import (
    census,
    enumerate_geodesics,
    geodesic_histogram,
    imposes_stress,
    stress,
    stress_oracle,
    stress_profile,
    stress_profile_accumulated,
    total_stress_from_histogram,
)
from .graph import UNREACHABLE, Graph, bfs, components, diameter, eccentricity, from_edge_list, induced_is_clique
from .report import emit_json
from .structure import (
    block_cut_decomposition,
    classify,
    detect_srg,
    has_single_positive_stress_vertex,
    is_star_by_stress,
    is_unique_cutvertex_complete_blocks,
    simplicial_vertices,
    stress_regularity,
)
from .verify import (
    check_invariants,
    enumerate_connected,
    scan,
    verify,
    verify_invariant_battery,
    verify_k_stress_characterization,
    verify_star_corollary,
    verify_unique_stress_theorem,
)

__version__ = "0.1.0"

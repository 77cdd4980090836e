"""Exact solvers, enumerators and reduction gadgets for connected transversals."""
from .graph import (
    INFINITE,
    Graph,
    GraphError,
    LineGraphMap,
    PreconditionError,
    bipartition,
    build_graph,
    find_induced_matching,
    girth,
    induced_subgraph,
    is_acyclic,
    is_bipartite,
    is_claw_free,
    is_connected,
    is_connected_set,
    is_sp2_free,
    line_graph,
    subdivide_edge,
)
from .kinds import TransversalKind, satisfies
from .enumerators import (
    EnumerationStream,
    brute_force_minimal_sets,
    enumerate_maximal_independent_sets,
    enumerate_minimal_fvs,
    enumerate_minimal_oct,
    enumerate_minimal_transversals,
    enumerate_minimal_vertex_covers,
)
from .solvers import (
    PriceBound,
    SolveReport,
    brute_force_min_connected,
    brute_force_min_transversal,
    connect_padding,
    exists_transversal,
    min_connected_transversal,
    min_transversal,
    price_constant,
)
from .gadgets import (
    CycleFactor,
    GadgetInstance,
    Provenance,
    gadget_cfvs_girth,
    gadget_cfvs_linegraph,
    gadget_coct_girth,
    gadget_coct_linegraph,
    gadget_oct_girth,
    gadget_oct_linegraph,
    has_even_cycle_factor,
    has_hamiltonian_path,
    verify_gadget,
)

__version__ = "0.1.0"

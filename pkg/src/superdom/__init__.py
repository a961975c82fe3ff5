"""Exact super domination toolkit for small simple graphs.

Core pieces: an immutable bitset graph type with edge-list I/O and a
small-graph isomorphism test, deterministic family generators, the
vertex surgeries and point-attaching compositions, exact gamma /
gamma_sp solvers with certificates, and an executable harness for the
known bounds.
"""

from .families import (
    build_family,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    friendship_graph,
    gnp_random_graph,
    path_graph,
    star_graph,
)
from .graph import (
    EdgeListError,
    Graph,
    SizeGuardError,
    VertexSet,
    is_isomorphic,
    read_edge_list,
    write_edge_list,
)
from .ops import CompositionResult, bouquet, chain, contract_clique, disjoint_union, odot
from .solver import (
    DomCertificate,
    SuperDomCertificate,
    first_violation,
    gamma,
    gamma_sp,
    gamma_sp_bruteforce,
    is_dominating,
    is_super_dominating,
    super_domination_witnesses,
)
from .theorems import HarnessConfig, RandomGrid, TheoremReport, run_harness

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "VertexSet",
    "EdgeListError",
    "SizeGuardError",
    "read_edge_list",
    "write_edge_list",
    "is_isomorphic",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "star_graph",
    "friendship_graph",
    "gnp_random_graph",
    "build_family",
    "odot",
    "contract_clique",
    "disjoint_union",
    "chain",
    "bouquet",
    "CompositionResult",
    "is_dominating",
    "is_super_dominating",
    "super_domination_witnesses",
    "first_violation",
    "gamma",
    "gamma_sp",
    "gamma_sp_bruteforce",
    "DomCertificate",
    "SuperDomCertificate",
    "TheoremReport",
    "HarnessConfig",
    "RandomGrid",
    "run_harness",
    "__version__",
]

"""Graph tools for the 21-edge triangle-free knotted-graph search."""

from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import BACKEND
from .canonical import (CanonicalCode, canonical_form, canonical_graph, canonical_labeling,
                        is_isomorphic)
from .catalog import (CatalogError, ConstructionError, NamedGraph, get, hc_family, k7_family,
                      lookup, match_family)
from .enumeration import DegreeSpec, EnumStats, InfeasibleSpecError, generate, generate_by_dedup
from .formats import FormatError, from_graph6, from_multitext, to_dot, to_graph6, to_multitext
from .graph import Graph, GraphError, contract, delete_vertices, suppress_reducible
from .moves import DY, YD, move_closure, nabla_y, y_nabla
from .planarity import (ApexKind, ApexWitness, KuratowskiCertificate, apex_witness,
                        find_kuratowski, is_homeomorphic_k33, is_planar, verify_kuratowski)
from .reduction import (NeighborhoodStats, Reduction, count_bound, neighborhood_stats,
                        reduce_pair, second_neighborhood)
from .theorem import Classification, Verdict, classify, verify_theorem1

enumerate_graphs = generate

__all__ = [
    "BACKEND", "CanonicalCode", "canonical_form", "canonical_graph", "canonical_labeling",
    "is_isomorphic", "CatalogError", "ConstructionError", "NamedGraph", "get", "hc_family",
    "k7_family", "lookup", "match_family", "DegreeSpec", "EnumStats", "InfeasibleSpecError",
    "generate", "generate_by_dedup", "enumerate_graphs", "FormatError", "from_graph6",
    "from_multitext", "to_dot", "to_graph6", "to_multitext", "Graph", "GraphError", "contract",
    "delete_vertices", "suppress_reducible", "DY", "YD", "move_closure", "nabla_y", "y_nabla",
    "ApexKind", "ApexWitness", "KuratowskiCertificate", "apex_witness", "find_kuratowski",
    "is_homeomorphic_k33", "is_planar", "verify_kuratowski", "NeighborhoodStats", "Reduction",
    "count_bound", "neighborhood_stats", "reduce_pair", "second_neighborhood", "Classification",
    "Verdict", "classify", "verify_theorem1",
]

"""Algebraic connectivity toolkit for small graphs.

Spectra, Fiedler vectors, bottleneck matrices and Perron components, named
extremal families, and exhaustive isomorph-free certification of extremal
statements about connected graphs with a fixed number of pendant vertices.
"""

from .enumeration import enumerate_connected, enumerate_trees, enumerate_unicyclic
from .extremal import (
    ExtremalReport,
    GraphClass,
    VerificationReport,
    class_members,
    extremal_mu,
    theorem_ids,
    verify_theorem,
)
from .families import FamilySpec, build_family
from .formats import parse_auto, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import (
    ComponentDecomposition,
    Graph,
    attach_paths,
    canonical_form,
    components_at,
    diameter,
    girth,
    graft,
    is_connected,
    is_cut_vertex,
    is_tree,
    pendant_vertices,
)
from .perron import (
    BottleneckMatrix,
    CharacteristicSet,
    bottleneck,
    bottleneck_tree,
    characteristic_set,
    cut_vertex_characteristic,
    perron_components_at,
    solve_balance,
    check_balance,
    solve_edge_gamma,
)
from .spectral import (
    Spectrum,
    SymMatrix,
    algebraic_connectivity,
    diameter_bound,
    eigen_sym,
    laplacian,
    mu_closed_form,
    mu_value,
)

__version__ = "0.1.0"

__all__ = [
    "BottleneckMatrix",
    "CharacteristicSet",
    "ComponentDecomposition",
    "ExtremalReport",
    "FamilySpec",
    "Graph",
    "GraphClass",
    "Spectrum",
    "SymMatrix",
    "VerificationReport",
    "algebraic_connectivity",
    "attach_paths",
    "bottleneck",
    "bottleneck_tree",
    "build_family",
    "canonical_form",
    "characteristic_set",
    "check_balance",
    "class_members",
    "components_at",
    "cut_vertex_characteristic",
    "diameter",
    "diameter_bound",
    "eigen_sym",
    "enumerate_connected",
    "enumerate_trees",
    "enumerate_unicyclic",
    "extremal_mu",
    "girth",
    "graft",
    "is_connected",
    "is_cut_vertex",
    "is_tree",
    "laplacian",
    "mu_closed_form",
    "mu_value",
    "parse_auto",
    "parse_edge_list",
    "parse_graph6",
    "pendant_vertices",
    "perron_components_at",
    "solve_balance",
    "solve_edge_gamma",
    "theorem_ids",
    "verify_theorem",
    "write_edge_list",
    "write_graph6",
]

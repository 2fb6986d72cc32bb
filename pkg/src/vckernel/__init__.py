"""Randomized polynomial kernelization for Vertex Cover parameterized by ``k - (2 LP - MM)``."""

from .decomposition import (
    FractionalCover,
    NiceDecomposition,
    classify_components,
    gallai_edmonds,
    inherit_after_delete,
    lp_value,
    nice_decomposition,
    nt_reduce,
    vc_lower_bound,
)
from .digraph import build_h, compute_xop, is_closest, min_vertex_separator, reachable_set
from .graph import (
    DirectedGraph,
    UndirectedGraph,
    connected_components,
    delete_vertices,
    parse_dimacs,
    to_dimacs,
)
from .kernel import KernelOutput, compute_ell, kernelize, remove_irrelevant, select_relevant
from .matching import HallViolation, Matching, augment_to_maximum, hall_match_singletons, maximum_matching
from .repset import (
    DEFAULT_PRIME,
    FieldMatrix,
    GammoidInstance,
    build_gammoid_digraph,
    gammoid_matrix,
    representative_family,
    representative_triples,
)
from .tightcover import critical_sets, has_tight_vc, is_factor_critical, vc_with_forced

__all__ = [name for name in dir() if not name.startswith("_")]

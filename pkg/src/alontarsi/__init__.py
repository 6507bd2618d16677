"""Alon-Tarsi orientations, degree-choosability structure, and exhaustive checks on small graphs."""

from .classifier import (Classification, DMembership, classify_connected, classify_degree_at,
                         classify_two_connected, membership_d)
from .coefficient import coefficient_oracle
from .coloring import (ListAssignment, bad_lists_for_d, bad_lists_gallai, equivalence_check_hx,
                       exists_proper_coloring, is_f_choosable, is_f_paintable)
from .config import GuardError
from .graph import Graph, GraphError, LabeledPair
from .graph6 import emit_graph6, parse_graph6
from .orient import EulerCounts, Orientation, eulerian_counts, is_degree_at, is_f_at, is_pair_at
from .structure import blocks, is_gallai_tree, lobes
from .witness import find_at_witness_subgraph

__all__ = [
    "Classification", "DMembership", "EulerCounts", "Graph", "GraphError", "GuardError",
    "LabeledPair", "ListAssignment", "Orientation", "bad_lists_for_d", "bad_lists_gallai", "blocks",
    "classify_connected", "classify_degree_at", "classify_two_connected", "coefficient_oracle",
    "emit_graph6", "equivalence_check_hx", "eulerian_counts", "exists_proper_coloring",
    "find_at_witness_subgraph", "is_degree_at", "is_f_at", "is_f_choosable", "is_f_paintable",
    "is_gallai_tree", "is_pair_at", "lobes", "membership_d", "parse_graph6",
]

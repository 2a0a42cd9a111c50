"""Directed-graph representation and primitives shared by every module."""

from .components import is_strongly_connected, min_outdeg_strong_subgraph, strong_components
from .digraph import (
    CycleWitness,
    DegreeProfile,
    Digraph,
    InducedSubgraph,
    PathWitness,
    ValidationReport,
    Violation,
    degree_profile,
    induced_subgraph,
    is_oriented,
    min_out_degree,
    prune_to_exact_outdegree,
    validate,
)
from .formats import (
    parse_edge_list,
    parse_instance,
    parse_json,
    read_instance,
    to_csv,
    to_dot,
    to_edge_list,
    to_json,
)
from .girth import GirthResult, girth

__all__ = [
    "CycleWitness",
    "DegreeProfile",
    "Digraph",
    "GirthResult",
    "InducedSubgraph",
    "PathWitness",
    "ValidationReport",
    "Violation",
    "degree_profile",
    "girth",
    "induced_subgraph",
    "is_oriented",
    "is_strongly_connected",
    "min_out_degree",
    "min_outdeg_strong_subgraph",
    "parse_edge_list",
    "parse_instance",
    "parse_json",
    "prune_to_exact_outdegree",
    "read_instance",
    "strong_components",
    "to_csv",
    "to_dot",
    "to_edge_list",
    "to_json",
    "validate",
]

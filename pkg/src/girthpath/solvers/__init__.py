"""Exact longest-path and cycle searches used as ground truth."""

from .brute import brute_force_girth, brute_force_longest_path
from .cycles import CycleBound, cycle_bound, find_two_disjoint_cycles
from .limits import SolverLimits
from .longest import (
    LongestPath,
    enumerate_maximum_paths,
    longest_path_exact,
    longest_path_from,
)

__all__ = [
    "CycleBound",
    "LongestPath",
    "SolverLimits",
    "brute_force_girth",
    "brute_force_longest_path",
    "cycle_bound",
    "enumerate_maximum_paths",
    "find_two_disjoint_cycles",
    "longest_path_exact",
    "longest_path_from",
]

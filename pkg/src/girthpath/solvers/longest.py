"""Exact longest directed path: subset DP with branch-and-bound above DP scale."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..core.errors import BudgetExceededError, EmptyDigraphError
from ..graph.digraph import Digraph, PathWitness
from . import _kernels
from .limits import SolverLimits

logger = logging.getLogger(__name__)

DEFAULT_LIMITS = SolverLimits()


@dataclass(frozen=True)
class LongestPath:
    """Exact longest path with its witness and how it was found."""

    length: int
    witness: PathWitness
    strategy: str
    nodes_expanded: int = 0


def popcounts(n: int) -> npt.NDArray[np.int8]:
    """Population count of every subset index below ``2**n``."""
    counts = np.zeros(1 << n, dtype=np.int8)
    for bit in range(n):
        counts[1 << bit : 1 << (bit + 1)] = counts[: 1 << bit] + 1
    return counts


def _out_mask_array(digraph: Digraph) -> npt.NDArray[np.int64]:
    return np.array(digraph.out_masks, dtype=np.int64)


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def subset_table(digraph: Digraph, start_mask: int) -> npt.NDArray[np.int64]:
    """Endpoint masks per vertex subset for paths starting in ``start_mask``."""
    return _kernels.path_table(_out_mask_array(digraph), digraph.vertex_count, start_mask)


def _trace_back(digraph: Digraph, table: npt.NDArray[np.int64], mask: int, end: int) -> PathWitness:
    """Rebuild a path covering ``mask`` and ending at ``end``, choosing the
    smallest predecessor at each step."""
    in_masks = digraph.in_masks
    sequence = [end]
    while mask & (mask - 1):
        rest = mask ^ (1 << end)
        candidates = int(table[rest]) & in_masks[end]
        end = _lowest_bit(candidates)
        sequence.append(end)
        mask = rest
    sequence.reverse()
    return PathWitness(tuple(sequence))


def _solve_dp(digraph: Digraph, start_mask: int) -> LongestPath:
    table = subset_table(digraph, start_mask)
    counts = popcounts(digraph.vertex_count)
    reachable = np.flatnonzero(table)
    top = int(counts[reachable].max())
    mask = int(reachable[counts[reachable] == top][0])
    end = _lowest_bit(int(table[mask]))
    witness = _trace_back(digraph, table, mask, end)
    return LongestPath(top - 1, witness, "subset-dp")


def _solve_branch_and_bound(
    digraph: Digraph, start_mask: int, limits: SolverLimits
) -> LongestPath:
    best_len, best_path, nodes, exhausted = _kernels.branch_and_bound(
        _out_mask_array(digraph), digraph.vertex_count, start_mask, limits.node_budget
    )
    if exhausted:
        raise BudgetExceededError(
            f"Branch-and-bound exhausted its budget of {limits.node_budget} nodes "
            f"(best so far {int(best_len)})"
        )
    logger.debug("Branch-and-bound expanded %d nodes", nodes)
    length = int(best_len)
    witness = PathWitness(tuple(int(v) for v in best_path[: length + 1]))
    return LongestPath(length, witness, "branch-and-bound", int(nodes))


def _solve(digraph: Digraph, start_mask: int, limits: SolverLimits) -> LongestPath:
    n = digraph.vertex_count
    if n == 0:
        raise EmptyDigraphError("Longest path is undefined for the empty digraph")
    limits.require_bb_scale(n)
    if n <= limits.max_dp_vertices:
        return _solve_dp(digraph, start_mask)
    return _solve_branch_and_bound(digraph, start_mask, limits)


def longest_path_exact(digraph: Digraph, limits: SolverLimits = DEFAULT_LIMITS) -> LongestPath:
    """Exact ℓ(D) with a witness path of that length.

    Raises:
        InstanceTooLargeError: If the digraph exceeds ``limits.max_bb_vertices``
        BudgetExceededError: If branch-and-bound runs out of nodes
    """
    return _solve(digraph, (1 << digraph.vertex_count) - 1, limits)


def longest_path_from(
    digraph: Digraph, vertex: int, limits: SolverLimits = DEFAULT_LIMITS
) -> LongestPath:
    """Exact maximum length over directed paths starting at ``vertex``."""
    digraph.check_vertex(vertex)
    return _solve(digraph, 1 << vertex, limits)


def enumerate_maximum_paths(
    digraph: Digraph, limits: SolverLimits = DEFAULT_LIMITS
) -> Iterator[PathWitness]:
    """Yield every maximum-length directed path exactly once.

    Paths are produced by subset (ascending), then endpoint (ascending), then
    predecessor choice (ascending).

    Raises:
        InstanceTooLargeError: If the digraph exceeds ``limits.max_dp_vertices``
    """
    n = digraph.vertex_count
    if n == 0:
        raise EmptyDigraphError("No paths in the empty digraph")
    limits.require_dp_scale(n)

    table = subset_table(digraph, (1 << n) - 1)
    counts = popcounts(n)
    reachable = np.flatnonzero(table)
    top = int(counts[reachable].max())
    in_masks = digraph.in_masks

    def suffixes(mask: int, end: int) -> Iterator[list[int]]:
        if not mask & (mask - 1):
            yield [end]
            return
        rest = mask ^ (1 << end)
        candidates = int(table[rest]) & in_masks[end]
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            for prefix in suffixes(rest, low.bit_length() - 1):
                prefix.append(end)
                yield prefix

    for mask in reachable[counts[reachable] == top]:
        ends = int(table[int(mask)])
        while ends:
            low = ends & -ends
            ends ^= low
            for sequence in suffixes(int(mask), low.bit_length() - 1):
                yield PathWitness(tuple(sequence))

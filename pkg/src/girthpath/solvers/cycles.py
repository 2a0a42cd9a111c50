"""Cycle bound of a non-extendable path and exact disjoint-cycle search."""

from dataclasses import dataclass

import numpy as np

from ..core.errors import NoCycleError, PathExtendableError, PreconditionError
from ..graph.digraph import CycleWitness, Digraph, PathWitness
from . import _kernels
from .limits import SolverLimits
from .longest import DEFAULT_LIMITS, popcounts


@dataclass(frozen=True)
class CycleBound:
    """Cycle closed by the endpoint's earliest on-path out-neighbour."""

    path: PathWitness
    bound: int
    back_index: int

    @property
    def cycle(self) -> CycleWitness:
        return CycleWitness(self.path.vertices[self.back_index :])


def cycle_bound(digraph: Digraph, path: PathWitness) -> CycleBound:
    """Minimal on-path index ``a`` among the endpoint's out-neighbours and the
    length ``path.length - a + 1`` of the cycle it closes.

    Raises:
        PreconditionError: If ``path`` is not a path of ``digraph``
        NoCycleError: If the endpoint has out-degree 0
        PathExtendableError: If the endpoint has an out-neighbour off the path
    """
    problems = path.check(digraph)
    if problems:
        raise PreconditionError(f"Not a path of the digraph: {'; '.join(problems)}")

    heads = digraph.out_neighbours[path.last]
    if not heads:
        raise NoCycleError(f"Endpoint {path.last} has no out-neighbour")

    position = {vertex: index for index, vertex in enumerate(path.vertices)}
    off_path = [head for head in heads if head not in position]
    if off_path:
        raise PathExtendableError(
            f"Endpoint {path.last} can be extended to {off_path[0]}"
        )

    back_index = min(position[head] for head in heads)
    return CycleBound(path, path.length - back_index + 1, back_index)


def find_two_disjoint_cycles(
    digraph: Digraph, min_len: int, limits: SolverLimits = DEFAULT_LIMITS
) -> tuple[CycleWitness, CycleWitness] | None:
    """Two vertex-disjoint directed cycles, each of length at least ``min_len``.

    Exact over all vertex subsets. The first cycle uses the smallest qualifying
    subset index, the second the smallest disjoint one.

    Raises:
        InstanceTooLargeError: If the digraph exceeds ``limits.max_dp_vertices``
    """
    n = digraph.vertex_count
    limits.require_dp_scale(n)
    min_len = max(min_len, 2)
    if n < 2 * min_len:
        return None

    out_masks = np.array(digraph.out_masks, dtype=np.int64)
    table = _kernels.anchored_cycle_table(out_masks, n)
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    lowest = masks & -masks
    counts = popcounts(n)

    # long[S]: S is the vertex set of a cycle of length >= min_len
    long = np.zeros(size, dtype=bool)
    for vertex in range(n):
        ends_here = ((table >> vertex) & 1).astype(bool)
        long |= ends_here & ((out_masks[vertex] & lowest) != 0)
    long &= counts >= min_len

    # contains[S]: some subset of S is such a cycle set
    contains = long.copy()
    for bit in range(n):
        view = contains.reshape(-1, 2, 1 << bit)
        view[:, 1, :] |= view[:, 0, :]

    full = size - 1
    firsts = np.flatnonzero(long & contains[full ^ masks])
    if firsts.size == 0:
        return None
    first = int(firsts[0])
    seconds = np.flatnonzero(long & ((masks & first) == 0))
    second = int(seconds[0])

    return (
        _cycle_from_table(digraph, table, first),
        _cycle_from_table(digraph, table, second),
    )


def _cycle_from_table(digraph: Digraph, table: np.ndarray, mask: int) -> CycleWitness:
    anchor = (mask & -mask).bit_length() - 1
    in_masks = digraph.in_masks
    closing = int(table[mask]) & in_masks[anchor]
    end = (closing & -closing).bit_length() - 1
    sequence = [end]
    while mask & (mask - 1):
        rest = mask ^ (1 << end)
        candidates = int(table[rest]) & in_masks[end]
        end = (candidates & -candidates).bit_length() - 1
        sequence.append(end)
        mask = rest
    sequence.reverse()
    return CycleWitness(tuple(sequence))

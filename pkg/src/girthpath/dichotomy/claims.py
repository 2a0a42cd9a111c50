"""Structural claims about a maximum path with maximum cycle bound.

Each checker returns a :class:`ClaimCheck` with a counterwitness instead of
raising, so sweeps can record failures as data.
"""

import logging

from ..core.errors import PreconditionError
from ..graph.digraph import Digraph, PathWitness
from ..solvers.cycles import find_two_disjoint_cycles
from ..solvers.limits import SolverLimits
from ..solvers.longest import DEFAULT_LIMITS
from .schemas import ClaimCheck

logger = logging.getLogger(__name__)

NO_TWO_LONG_CYCLES = "no_two_long_cycles"
OUTNEIGHBOURS_ON_PATH = "outneighbours_on_path"
PREDECESSORS_STAY_ON_CYCLE = "predecessors_stay_on_cycle"


def check_no_two_long_cycles(
    digraph: Digraph, delta: int, limits: SolverLimits = DEFAULT_LIMITS
) -> ClaimCheck:
    """No two vertex-disjoint cycles of length at least δ + 1."""
    pair = find_two_disjoint_cycles(digraph, delta + 1, limits)
    if pair is None:
        return ClaimCheck(NO_TWO_LONG_CYCLES, True)
    logger.debug("Found disjoint cycles of lengths %d and %d", pair[0].length, pair[1].length)
    return ClaimCheck(NO_TWO_LONG_CYCLES, False, (pair[0].vertices, pair[1].vertices))


def _pivot(path: PathWitness, a: int) -> int:
    if not 1 <= a <= path.length:
        raise PreconditionError(f"Back index must lie in [1, {path.length}], got {a}")
    return path.vertices[a - 1]


def check_outneighbours_on_path(digraph: Digraph, path: PathWitness, a: int) -> ClaimCheck:
    """Every out-neighbour of v_{a−1} lies on the path.

    Raises:
        PreconditionError: If ``a`` is not a positive index on the path
    """
    pivot = _pivot(path, a)
    on_path = set(path.vertices)
    off_path = tuple(head for head in digraph.out_neighbours[pivot] if head not in on_path)
    if off_path:
        return ClaimCheck(OUTNEIGHBOURS_ON_PATH, False, (off_path,))
    return ClaimCheck(OUTNEIGHBOURS_ON_PATH, True)


def cycle_predecessors(digraph: Digraph, path: PathWitness, a: int) -> tuple[list[int], list[int]]:
    """B, the pivot's out-neighbours on the cycle v_a … v_ℓ, and B⁻, their
    cycle predecessors, both in cycle order."""
    pivot = _pivot(path, a)
    cycle = path.vertices[a:]
    heads = set(digraph.out_neighbours[pivot])
    b_set = [vertex for vertex in cycle if vertex in heads]
    position = {vertex: index for index, vertex in enumerate(cycle)}
    b_minus = [cycle[position[vertex] - 1] for vertex in b_set]
    return b_set, b_minus


def check_predecessors_stay_on_cycle(digraph: Digraph, path: PathWitness, a: int) -> ClaimCheck:
    """Every out-neighbour of B⁻ lies on the cycle v_a … v_ℓ.

    Raises:
        PreconditionError: If ``a`` is not a positive index on the path
    """
    _, b_minus = cycle_predecessors(digraph, path, a)
    cycle = set(path.vertices[a:])
    leaving = tuple(
        (tail, head)
        for tail in b_minus
        for head in digraph.out_neighbours[tail]
        if head not in cycle
    )
    if leaving:
        return ClaimCheck(PREDECESSORS_STAY_ON_CYCLE, False, leaving)
    return ClaimCheck(PREDECESSORS_STAY_ON_CYCLE, True)

"""Join maximal paths of consecutive parts into one long path."""

import logging
from collections.abc import Sequence

from ..core.errors import InvalidPartitionError
from ..core.types import Arc, VertexSet
from ..graph.digraph import Digraph, PathWitness
from ..graph.girth import girth as exact_girth
from .schemas import StitchResult

logger = logging.getLogger(__name__)


def _check_parts(digraph: Digraph, parts: Sequence[Sequence[int]]) -> list[VertexSet]:
    if not parts:
        raise InvalidPartitionError("Partition has no parts")
    members: list[VertexSet] = []
    seen: set[int] = set()
    for index, part in enumerate(parts):
        if not part:
            raise InvalidPartitionError(f"Part {index + 1} is empty")
        chosen = frozenset(part)
        for vertex in chosen:
            digraph.check_vertex(vertex)
        if seen & chosen:
            raise InvalidPartitionError(f"Part {index + 1} overlaps an earlier part")
        seen |= chosen
        members.append(chosen)
    return members


def stitch_long_path(
    digraph: Digraph,
    parts: Sequence[Sequence[int]],
    known_girth: int | None = None,
) -> StitchResult:
    """Greedy maximal path through V_1, …, V_t joined by single crossing arcs.

    Each segment starts at the crossing target (the smallest vertex of V_1 for
    the first) and repeatedly moves to the smallest unvisited out-neighbour in
    its part. The crossing arc goes to the endpoint's smallest out-neighbour in
    the next part.

    Args:
        digraph: Digraph whose vertices the parts cover
        parts: Disjoint vertex sets in stitching order
        known_girth: Exact girth when already computed; computed otherwise

    Raises:
        InvalidPartitionError: If a part is empty, parts overlap, a segment
            endpoint has no out-neighbour in the next part, or the path falls
            short of t(g − 1) + t − 1 because some part has a vertex without an
            out-neighbour inside it
    """
    members = _check_parts(digraph, parts)
    g = known_girth if known_girth is not None else exact_girth(digraph).length
    out = digraph.out_neighbours

    sequence: list[int] = []
    segment_lengths: list[int] = []
    connectors: list[Arc] = []
    current = min(members[0])

    for index, part in enumerate(members):
        if index > 0:
            targets = [head for head in out[current] if head in part]
            if not targets:
                raise InvalidPartitionError(
                    f"Vertex {current} has no out-neighbour in part {index + 1}"
                )
            connectors.append((current, targets[0]))
            current = targets[0]

        segment = [current]
        visited = {current}
        while True:
            step = next(
                (head for head in out[current] if head in part and head not in visited),
                None,
            )
            if step is None:
                break
            segment.append(step)
            visited.add(step)
            current = step

        sequence.extend(segment)
        segment_lengths.append(len(segment) - 1)

    t = len(members)
    floor = t * (g - 1) + t - 1 if g is not None else t - 1
    length = len(sequence) - 1
    if g is not None and length < floor:
        short = next(i for i, size in enumerate(segment_lengths) if size < g - 1)
        raise InvalidPartitionError(
            f"Stitched path of length {length} is below the floor {floor}: "
            f"segment {short + 1} has length {segment_lengths[short]} < g - 1 = {g - 1}"
        )
    logger.debug("Stitched %d segments into a path of length %d", t, length)
    return StitchResult(
        path=PathWitness(tuple(sequence)),
        segment_lengths=tuple(segment_lengths),
        connectors_used=tuple(connectors),
        guaranteed_floor=floor,
        girth=g,
    )

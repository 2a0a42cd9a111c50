"""Exact girth by breadth-first search from every vertex."""

import math
from collections import deque
from dataclasses import dataclass

from .digraph import CycleWitness, Digraph


@dataclass(frozen=True)
class GirthResult:
    """Shortest directed cycle length; ``length`` is None for acyclic digraphs."""

    length: int | None
    witness: CycleWitness | None

    @property
    def is_finite(self) -> bool:
        return self.length is not None

    @property
    def value(self) -> float:
        """Girth as a number, ``math.inf`` when acyclic."""
        return math.inf if self.length is None else float(self.length)


def girth(digraph: Digraph) -> GirthResult:
    """Exact girth with a shortest-cycle witness.

    Each BFS stops as soon as it cannot beat the best cycle found so far, and
    the whole search stops at length 2.
    """
    n = digraph.vertex_count
    out = digraph.out_neighbours
    in_masks = digraph.in_masks
    best: int | None = None
    best_cycle: tuple[int, ...] | None = None

    for source in range(n):
        if best == 2:
            break
        if in_masks[source] == 0 or not out[source]:
            continue
        dist = [-1] * n
        parent = [-1] * n
        dist[source] = 0
        queue = deque([source])
        closing: int | None = None

        while queue:
            vertex = queue.popleft()
            depth = dist[vertex]
            if best is not None and depth + 1 >= best:
                break
            if (in_masks[source] >> vertex) & 1:
                closing = vertex
                break
            for head in out[vertex]:
                if dist[head] == -1:
                    dist[head] = depth + 1
                    parent[head] = vertex
                    queue.append(head)

        if closing is None:
            continue
        cycle = [closing]
        while cycle[-1] != source:
            cycle.append(parent[cycle[-1]])
        cycle.reverse()
        best = len(cycle)
        best_cycle = tuple(cycle)

    if best is None or best_cycle is None:
        return GirthResult(None, None)
    return GirthResult(best, CycleWitness(best_cycle))

"""Strongly connected components and the strong-subgraph reduction."""

import logging

from .digraph import Digraph, InducedSubgraph, induced_subgraph, min_out_degree

logger = logging.getLogger(__name__)


def strong_components(digraph: Digraph) -> list[list[int]]:
    """Strongly connected components in reverse topological order.

    Iterative Tarjan. Sink components come first, so every arc joining two
    different components runs from a later-reported component to an earlier
    one. Each component is sorted ascending.
    """
    n = digraph.vertex_count
    out = digraph.out_neighbours
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # (vertex, next out-neighbour position)
        work: list[tuple[int, int]] = [(root, 0)]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True

        while work:
            vertex, position = work[-1]
            heads = out[vertex]
            if position < len(heads):
                work[-1] = (vertex, position + 1)
                head = heads[position]
                if index[head] == -1:
                    index[head] = lowlink[head] = counter
                    counter += 1
                    stack.append(head)
                    on_stack[head] = True
                    work.append((head, 0))
                elif on_stack[head]:
                    lowlink[vertex] = min(lowlink[vertex], index[head])
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[vertex])
            if lowlink[vertex] == index[vertex]:
                component: list[int] = []
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component.append(member)
                    if member == vertex:
                        break
                components.append(sorted(component))

    return components


def is_strongly_connected(digraph: Digraph) -> bool:
    return digraph.vertex_count > 0 and len(strong_components(digraph)) == 1


def min_outdeg_strong_subgraph(digraph: Digraph, delta: int) -> InducedSubgraph | None:
    """Induced strong component whose internal minimum out-degree is at least ``delta``.

    Among qualifying components the one containing the smallest vertex id is
    returned; ``None`` when no component qualifies.
    """
    qualifying: list[InducedSubgraph] = []
    for component in strong_components(digraph):
        sub = induced_subgraph(digraph, component)
        if min_out_degree(sub.digraph) >= delta:
            qualifying.append(sub)

    if not qualifying:
        logger.debug("No strong component reaches out-degree %d", delta)
        return None
    return min(qualifying, key=lambda sub: sub.vertices[0])

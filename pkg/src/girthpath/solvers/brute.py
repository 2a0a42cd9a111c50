"""Naive exhaustive oracles for cross-checking the exact solvers.

Only meant for tiny digraphs; both enumerate every simple path.
"""

from ..graph.digraph import Digraph


def brute_force_longest_path(digraph: Digraph) -> int:
    """ℓ(D) by depth-first enumeration of all simple paths; -1 when empty."""
    out = digraph.out_neighbours
    best = -1

    def extend(vertex: int, visited: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for head in out[vertex]:
            if head not in visited:
                visited.add(head)
                extend(head, visited, length + 1)
                visited.remove(head)

    for start in range(digraph.vertex_count):
        extend(start, {start}, 0)
    return best


def brute_force_girth(digraph: Digraph) -> int | None:
    """Shortest cycle over all simple cycles, each enumerated from its
    smallest vertex; None when acyclic."""
    out = digraph.out_neighbours
    best: int | None = None

    def walk(start: int, vertex: int, visited: set[int], length: int) -> None:
        nonlocal best
        for head in out[vertex]:
            if head == start:
                if best is None or length + 1 < best:
                    best = length + 1
            elif head > start and head not in visited:
                visited.add(head)
                walk(start, head, visited, length + 1)
                visited.remove(head)

    for start in range(digraph.vertex_count):
        walk(start, start, {start}, 0)
    return best

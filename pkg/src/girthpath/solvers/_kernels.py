"""Compiled bitmask kernels for the exact solvers.

Vertex sets are int64 bitmasks, so kernels handle at most 62 vertices.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _bit_index(low):
    index = 0
    while ((low >> index) & 1) == 0:
        index += 1
    return index


@njit(cache=True)
def _popcount(x):
    count = 0
    while x != 0:
        x &= x - 1
        count += 1
    return count


@njit(cache=True)
def path_table(out_masks, n, start_mask):
    """Endpoint masks of simple paths per vertex subset.

    ``table[S]`` has bit ``v`` set iff some simple path starting in
    ``start_mask`` visits exactly the vertices of ``S`` and ends at ``v``.
    """
    size = np.int64(1) << n
    table = np.zeros(size, dtype=np.int64)
    one = np.int64(1)
    for v in range(n):
        if ((start_mask >> v) & 1) != 0:
            table[one << v] = one << v
    for mask in range(1, size):
        ends = table[mask]
        while ends != 0:
            low = ends & -ends
            ends ^= low
            v = _bit_index(low)
            nxt = out_masks[v] & ~mask
            while nxt != 0:
                bit = nxt & -nxt
                nxt ^= bit
                table[mask | bit] |= bit
    return table


@njit(cache=True)
def anchored_cycle_table(out_masks, n):
    """Like :func:`path_table` but every path starts at the lowest vertex of
    its subset, so closing arcs back to that vertex enumerate cycles once."""
    size = np.int64(1) << n
    table = np.zeros(size, dtype=np.int64)
    one = np.int64(1)
    for v in range(n):
        table[one << v] = one << v
    for mask in range(1, size):
        ends = table[mask]
        if ends == 0:
            continue
        lowest = mask & -mask
        above = ~((lowest << 1) - 1)
        while ends != 0:
            low = ends & -ends
            ends ^= low
            v = _bit_index(low)
            nxt = out_masks[v] & ~mask & above
            while nxt != 0:
                bit = nxt & -nxt
                nxt ^= bit
                table[mask | bit] |= bit
    return table


@njit(cache=True)
def _reach_count(out_masks, vertex, visited):
    reach = np.int64(0)
    frontier = out_masks[vertex] & ~visited
    while frontier != 0:
        reach |= frontier
        nxt = np.int64(0)
        f = frontier
        while f != 0:
            low = f & -f
            f ^= low
            nxt |= out_masks[_bit_index(low)]
        frontier = nxt & ~visited & ~reach
    return _popcount(reach)


@njit(cache=True)
def branch_and_bound(out_masks, n, start_mask, node_budget):
    """Depth-first longest simple path search with reachability pruning.

    Returns ``(best_length, best_path, nodes_expanded, exhausted)``; when
    ``exhausted`` is true the budget ran out and the result is not exact.
    """
    one = np.int64(1)
    best_len = -1
    best_path = np.zeros(n, dtype=np.int64)
    path = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    nodes = 0
    full = n - 1

    for s in range(n):
        if ((start_mask >> s) & 1) == 0:
            continue
        nodes += 1
        if nodes > node_budget:
            return best_len, best_path, nodes, True
        visited = one << s
        path[0] = s
        if best_len < 0:
            best_len = 0
            best_path[0] = s
        if _reach_count(out_masks, s, visited) <= best_len:
            continue
        cand[0] = out_masks[s] & ~visited
        depth = 0

        while depth >= 0:
            c = cand[depth]
            if c == 0:
                visited ^= one << path[depth]
                depth -= 1
                continue
            low = c & -c
            cand[depth] = c ^ low
            w = _bit_index(low)

            nodes += 1
            if nodes > node_budget:
                return best_len, best_path, nodes, True

            depth += 1
            path[depth] = w
            visited |= low
            if depth > best_len:
                best_len = depth
                for i in range(depth + 1):
                    best_path[i] = path[i]
                if best_len == full:
                    return best_len, best_path, nodes, False

            if depth + _reach_count(out_masks, w, visited) <= best_len:
                cand[depth] = 0
            else:
                cand[depth] = out_masks[w] & ~visited

    return best_len, best_path, nodes, False

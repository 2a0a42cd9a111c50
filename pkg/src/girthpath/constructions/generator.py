"""Seeded random instance generators for verification corpora."""

import logging

import numpy as np

from ..core.errors import GenerationError
from ..core.types import Arc
from ..graph.digraph import Digraph
from .schemas import GenSpec, GraphKind

logger = logging.getLogger(__name__)

# Full restarts (oriented) or repair passes (cd_regular) before giving up
MAX_ATTEMPTS = 100


def generate(spec: GenSpec, max_attempts: int = MAX_ATTEMPTS) -> Digraph:
    """Generate a random digraph of ``spec.kind``; deterministic given the seed.

    Args:
        spec: Kind, size, degree, C and seed
        max_attempts: Bound on restarts/repair passes

    Returns:
        Digraph satisfying the kind's degree contract

    Raises:
        PreconditionError: If ``spec`` describes no digraph
        GenerationError: If repair fails within ``max_attempts``
    """
    spec.check_feasible()
    rng = np.random.default_rng(spec.seed)

    if spec.kind is GraphKind.OUT_REGULAR:
        out_sets = _out_regular(spec.n, spec.d, rng)
    elif spec.kind is GraphKind.ORIENTED_MIN_OUTDEG:
        out_sets = _oriented(spec.n, spec.d, rng, max_attempts)
    else:
        out_sets = _cd_regular(spec.n, spec.d, spec.in_degree_cap(), rng, max_attempts)

    arcs: list[Arc] = [(u, v) for u in range(spec.n) for v in sorted(out_sets[u])]
    return Digraph(spec.n, tuple(arcs))


def _sample_heads(n: int, tail: int, d: int, rng: np.random.Generator) -> set[int]:
    others = np.delete(np.arange(n), tail)
    return {int(v) for v in rng.choice(others, size=d, replace=False)}


def _out_regular(n: int, d: int, rng: np.random.Generator) -> list[set[int]]:
    return [_sample_heads(n, tail, d, rng) for tail in range(n)]


def _oriented(
    n: int, d: int, rng: np.random.Generator, max_attempts: int
) -> list[set[int]]:
    """Per-vertex sampling that never closes a 2-cycle; a vertex left with too
    few admissible heads gets in-arcs rewired away from it."""
    for attempt in range(max_attempts):
        out_sets: list[set[int]] = [set() for _ in range(n)]
        in_sets: list[set[int]] = [set() for _ in range(n)]
        failed = False

        for raw in rng.permutation(n):
            tail = int(raw)
            allowed = [u for u in range(n) if u != tail and u not in in_sets[tail]]
            if len(allowed) < d:
                _rewire_in_arcs(tail, d - len(allowed), out_sets, in_sets, rng)
                allowed = [u for u in range(n) if u != tail and u not in in_sets[tail]]
            if len(allowed) < d:
                failed = True
                break
            for raw_head in rng.choice(allowed, size=d, replace=False):
                head = int(raw_head)
                out_sets[tail].add(head)
                in_sets[head].add(tail)

        if not failed:
            return out_sets
        logger.debug("Oriented generation attempt %d failed, restarting", attempt + 1)

    raise GenerationError(
        f"Could not build an oriented graph with n={n}, d={d} in {max_attempts} attempts"
    )


def _rewire_in_arcs(
    vertex: int,
    needed: int,
    out_sets: list[set[int]],
    in_sets: list[set[int]],
    rng: np.random.Generator,
) -> None:
    """Move up to ``needed`` arcs ``u -> vertex`` to ``u -> w`` with w unrelated to u."""
    n = len(out_sets)
    tails = sorted(in_sets[vertex])
    for raw in rng.permutation(len(tails)):
        if needed == 0:
            return
        u = tails[int(raw)]
        targets = [
            w
            for w in range(n)
            if w not in (u, vertex) and w not in out_sets[u] and w not in in_sets[u]
        ]
        if not targets:
            continue
        w = targets[int(rng.integers(len(targets)))]
        out_sets[u].discard(vertex)
        in_sets[vertex].discard(u)
        out_sets[u].add(w)
        in_sets[w].add(u)
        needed -= 1


def _cd_regular(
    n: int, d: int, cap: int, rng: np.random.Generator, max_attempts: int
) -> list[set[int]]:
    """Out-regular sampling followed by resampling the tails of overloaded heads."""
    out_sets = _out_regular(n, d, rng)
    in_degree = [0] * n
    in_sets: list[set[int]] = [set() for _ in range(n)]
    for tail, heads in enumerate(out_sets):
        for head in heads:
            in_degree[head] += 1
            in_sets[head].add(tail)

    for attempt in range(max_attempts):
        overloaded = [v for v in range(n) if in_degree[v] > cap]
        if not overloaded:
            return out_sets
        logger.debug("Repair pass %d: %d overloaded heads", attempt + 1, len(overloaded))
        for head in overloaded:
            tails = sorted(in_sets[head])
            excess = in_degree[head] - cap
            for raw in rng.choice(len(tails), size=excess, replace=False):
                tail = tails[int(raw)]
                targets = [
                    w
                    for w in range(n)
                    if w != tail and w not in out_sets[tail] and in_degree[w] < cap
                ]
                if not targets:
                    continue
                w = targets[int(rng.integers(len(targets)))]
                out_sets[tail].discard(head)
                in_sets[head].discard(tail)
                in_degree[head] -= 1
                out_sets[tail].add(w)
                in_sets[w].add(tail)
                in_degree[w] += 1

    if any(degree > cap for degree in in_degree):
        raise GenerationError(
            f"In-degrees still exceed {cap} after {max_attempts} repair passes"
        )
    return out_sets

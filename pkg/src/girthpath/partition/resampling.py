"""Balanced partitions with a cross-degree floor via permutation resampling.

Vertices are grouped into blocks of t consecutive ids (the last block padded
with isolated fake vertices). Each block is spread over the t parts by a
uniformly random permutation. While some vertex has a cross-degree far from
d⁺(v)/t, the permutations of every block holding one of its out-neighbours,
plus its own block, are redrawn.
"""

import logging
import math
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from ..core.errors import ConvergenceError, NotRegularError, PreconditionError
from ..core.types import VertexSet
from ..graph.digraph import Digraph
from .schemas import Feasibility, LllConfig, PartitionCertificate

logger = logging.getLogger(__name__)

# Candidate values of c′, largest first
C_PRIME_GRID = tuple(Fraction(1, 2**k) for k in range(11))


def parts_for(c_prime: Fraction, d: int) -> int:
    """t = ⌊c′·d / ln d⌋."""
    return math.floor(float(c_prime) * d / math.log(d))


def lll_feasibility(cfg: LllConfig) -> Feasibility:
    """Evaluate t and 2e^{−d/(12t)+1}(C(dt)² + 1) < 1 for ``cfg``.

    Raises:
        PreconditionError: If d <= 1
    """
    if cfg.d <= 1:
        raise PreconditionError(f"Need d > 1 so that ln d > 0, got d={cfg.d}")
    t = parts_for(cfg.c_prime, cfg.d)
    if t < 1:
        return Feasibility(t, False, None)
    value = 2 * math.exp(-cfg.d / (12 * t) + 1) * (float(cfg.C) * (cfg.d * t) ** 2 + 1)
    return Feasibility(t, value < 1, value)


def default_c_prime(C: Fraction, d: int) -> Fraction | None:
    """Largest grid value of c′ whose t is positive and satisfies the inequality."""
    for c_prime in C_PRIME_GRID:
        feasibility = lll_feasibility(LllConfig(C, d, c_prime))
        if feasibility.feasible:
            return c_prime
    return None


def c_prime_for_parts(d: int, t: int) -> Fraction:
    """Rational c′ with c′·d/ln d = t + ½, so that exactly t parts are used."""
    if d <= 1 or t < 1:
        raise PreconditionError(f"Need d > 1 and t >= 1, got d={d}, t={t}")
    return Fraction((t + 0.5) * math.log(d) / d).limit_denominator(10**6)


def check_cd_regular(digraph: Digraph, C: Fraction, d: int) -> None:
    """Every out-degree at least d and every in-degree at most ⌊C·d⌋.

    Raises:
        NotRegularError: Naming the first offending vertex
    """
    cap = math.floor(Fraction(C) * d)
    for vertex in range(digraph.vertex_count):
        if digraph.out_degree(vertex) < d:
            raise NotRegularError(
                f"Vertex {vertex} has out-degree {digraph.out_degree(vertex)} < d={d}"
            )
        if digraph.in_degree(vertex) > cap:
            raise NotRegularError(
                f"Vertex {vertex} has in-degree {digraph.in_degree(vertex)} > C·d={cap}"
            )


def bad_event(digraph: Digraph, vertex: int, part: VertexSet | set[int], t: int) -> bool:
    """True iff |d⁺(v, part) − d⁺(v)/t| ≥ d⁺(v)/(2t), in exact integers.

    Raises:
        PreconditionError: If t < 1
    """
    if t < 1:
        raise PreconditionError(f"Number of parts must be positive, got {t}")
    digraph.check_vertex(vertex)
    cross = digraph.out_degree_into(vertex, part)
    degree = digraph.out_degree(vertex)
    return 2 * abs(t * cross - degree) >= degree


def _arc_arrays(digraph: Digraph) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    if not digraph.arcs:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    arcs = np.array(digraph.arcs, dtype=np.int64)
    return arcs[:, 0], arcs[:, 1]


def cross_degrees(
    digraph: Digraph, part_of: npt.NDArray[np.int64], t: int
) -> npt.NDArray[np.int64]:
    """Matrix X with X[v, j] = d⁺(v, V_j)."""
    n = digraph.vertex_count
    tails, heads = _arc_arrays(digraph)
    counts = np.bincount(tails * t + part_of[heads], minlength=n * t)
    return counts.reshape(n, t)


def _bad_matrix(
    cross: npt.NDArray[np.int64], degrees: npt.NDArray[np.int64], t: int
) -> npt.NDArray[np.bool_]:
    column = degrees[:, None]
    return 2 * np.abs(t * cross - column) >= column


def partition_lll(digraph: Digraph, cfg: LllConfig) -> PartitionCertificate:
    """Resample block permutations until no vertex has a bad cross-degree.

    The smallest (v, j) with a bad event is repaired first. Deterministic for
    a given ``cfg.seed``.

    Raises:
        NotRegularError: If the digraph is not (C, d)-regular
        PreconditionError: If the configuration gives fewer than one part
        ConvergenceError: If ``cfg.max_resample_rounds`` is exceeded
    """
    check_cd_regular(digraph, cfg.C, cfg.d)
    feasibility = lll_feasibility(cfg)
    t = feasibility.t
    if t < 1:
        raise PreconditionError(f"c'={cfg.c_prime} gives no parts for d={cfg.d}")
    if not feasibility.feasible:
        logger.debug(
            "Local-lemma inequality fails for t=%d (value %.3g); resampling anyway",
            t,
            feasibility.inequality_value,
        )

    n = digraph.vertex_count
    blocks = -(-n // t)
    fake_count = blocks * t - n
    rng = np.random.default_rng(cfg.seed)
    slots = np.arange(t, dtype=np.int64)

    # part_of[u] is the part of slot vertex u, fakes included
    part_of = np.empty(blocks * t, dtype=np.int64)
    for block in range(blocks):
        part_of[block * t + rng.permutation(t)] = slots

    degrees = np.array([digraph.out_degree(v) for v in range(n)], dtype=np.int64)
    cross = cross_degrees(digraph, part_of, t)
    out = digraph.out_neighbours
    rounds = 0

    while True:
        bad = np.flatnonzero(_bad_matrix(cross, degrees, t))
        if bad.size == 0:
            break
        if rounds >= cfg.max_resample_rounds:
            raise ConvergenceError(
                f"Resampling did not converge within {cfg.max_resample_rounds} rounds "
                f"({bad.size} bad events left)"
            )
        vertex = int(bad[0]) // t
        touched = {head // t for head in out[vertex]}
        touched.add(vertex // t)
        for block in sorted(touched):
            part_of[block * t + rng.permutation(t)] = slots
        cross = cross_degrees(digraph, part_of, t)
        rounds += 1

    logger.debug("Partition into %d parts converged after %d rounds", t, rounds)
    real = part_of[:n]
    parts = tuple(tuple(int(v) for v in np.flatnonzero(real == j)) for j in range(t))
    return PartitionCertificate(
        parts=parts,
        t=t,
        sizes=tuple(len(part) for part in parts),
        degree_floor=cfg.degree_floor,
        min_cross_degree=int(cross.min()) if n else 0,
        resample_rounds_used=rounds,
        fake_vertex_count=fake_count,
        c_prime=cfg.c_prime,
        seed=cfg.seed,
    )


def verify_certificate(digraph: Digraph, certificate: PartitionCertificate) -> list[str]:
    """Recount balance and every cross-degree of ``certificate`` directly.

    Returns:
        List of failures; empty when the certificate holds for ``digraph``
    """
    failures: list[str] = []
    n = digraph.vertex_count
    t = certificate.t
    part_of = np.full(n, -1, dtype=np.int64)
    for index, part in enumerate(certificate.parts):
        for vertex in part:
            if not 0 <= vertex < n:
                failures.append(f"vertex {vertex} out of range")
            elif part_of[vertex] != -1:
                failures.append(f"vertex {vertex} appears in two parts")
            else:
                part_of[vertex] = index
    missing = np.flatnonzero(part_of == -1)
    if missing.size:
        failures.append(f"{missing.size} vertices are in no part")
    if failures:
        return failures

    sizes = [len(part) for part in certificate.parts]
    if max(sizes) - min(sizes) > 1:
        failures.append(f"part sizes {sizes} differ by more than 1")
    if tuple(sizes) != certificate.sizes:
        failures.append("recorded sizes differ from the parts")

    cross = cross_degrees(digraph, part_of, t)
    low = np.argwhere(cross < certificate.required_degree)
    for vertex, index in low[:10]:
        failures.append(
            f"d+({int(vertex)}, V_{int(index) + 1}) = {int(cross[vertex, index])} "
            f"< {certificate.required_degree}"
        )
    if len(low) > 10:
        failures.append(f"... {len(low) - 10} more low cross-degrees")
    if n and int(cross.min()) != certificate.min_cross_degree:
        failures.append("recorded minimum cross-degree differs from the recount")
    return failures

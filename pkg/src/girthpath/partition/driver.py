"""End-to-end long-path search for (C, d)-regular digraphs."""

import logging
import math
from dataclasses import replace
from fractions import Fraction

from ..graph.digraph import Digraph, min_out_degree
from ..graph.girth import girth as exact_girth
from .resampling import check_cd_regular, default_c_prime, lll_feasibility, partition_lll
from .schemas import (
    DEFAULT_MAX_RESAMPLE_ROUNDS,
    LllConfig,
    LongPathRun,
    RunProvenance,
    StitchResult,
)
from .stitching import stitch_long_path

logger = logging.getLogger(__name__)


def _target(c_prime: Fraction | None, d: int, g: int | None) -> float | None:
    if c_prime is None or g is None or d <= 1:
        return None
    return float(c_prime) / 2 * d * g / math.log(d)


def _ratio(achieved: int, d: int, g: int | None) -> float | None:
    """achieved / (d·g / ln d), comparable with c = c′/2."""
    if g is None or d <= 1:
        return None
    return achieved * math.log(d) / (d * g)


def _fallback(
    digraph: Digraph,
    C: Fraction,
    d: int,
    g: int | None,
    c_prime: Fraction | None,
    reason: str,
    inequality_value: float | None = None,
) -> LongPathRun:
    logger.warning("Falling back to a single part: %s", reason)
    stitch = stitch_long_path(digraph, [range(digraph.vertex_count)], g)
    stitch = replace(stitch, target=_target(c_prime, d, g))
    provenance = RunProvenance(
        C=C,
        d=d,
        t=1,
        c_prime=c_prime,
        achieved=stitch.path.length,
        fallback_reason=reason,
        inequality_value=inequality_value,
        ratio=_ratio(stitch.path.length, d, g),
    )
    return LongPathRun(stitch, provenance)


def find_long_path(
    digraph: Digraph,
    C: Fraction | int,
    *,
    d: int | None = None,
    c_prime: Fraction | None = None,
    seed: int = 0,
    max_resample_rounds: int = DEFAULT_MAX_RESAMPLE_ROUNDS,
    require_inequality: bool = True,
) -> LongPathRun:
    """Partition, then stitch a long path with provenance.

    Falls back to one part when d ≤ 1, when no c′ is available, when t ≤ 1,
    or when the local-lemma inequality fails and ``require_inequality`` is set.

    Args:
        digraph: (C, d)-regular digraph
        C: In-degree constant
        d: Out-degree floor; defaults to δ⁺(D)
        c_prime: Partition constant; defaults to the largest passing grid value
        seed: Seed for the permutation draws
        max_resample_rounds: Round cap for resampling
        require_inequality: Fall back when the inequality fails for the chosen t

    Raises:
        NotRegularError: If the digraph is not (C, d)-regular
        ConvergenceError: If resampling does not converge
        InvalidPartitionError: If stitching finds a part unreachable or falls
            short of its floor
    """
    C = Fraction(C)
    degree = min_out_degree(digraph) if d is None else d
    check_cd_regular(digraph, C, degree)
    g = exact_girth(digraph).length

    if degree <= 1:
        return _fallback(digraph, C, degree, g, c_prime, f"d={degree} <= 1")

    chosen = c_prime if c_prime is not None else default_c_prime(C, degree)
    if chosen is None:
        return _fallback(digraph, C, degree, g, None, "no c' satisfies the inequality")

    cfg = LllConfig(C, degree, chosen, seed, max_resample_rounds)
    feasibility = lll_feasibility(cfg)
    if feasibility.t <= 1:
        return _fallback(
            digraph, C, degree, g, chosen, f"t={feasibility.t} <= 1", feasibility.inequality_value
        )
    if require_inequality and not feasibility.feasible:
        return _fallback(
            digraph, C, degree, g, chosen, "inequality fails", feasibility.inequality_value
        )

    certificate = partition_lll(digraph, cfg)
    stitch: StitchResult = stitch_long_path(digraph, certificate.parts, g)
    stitch = replace(stitch, target=_target(chosen, degree, g))
    provenance = RunProvenance(
        C=C,
        d=degree,
        t=certificate.t,
        c_prime=chosen,
        achieved=stitch.path.length,
        inequality_value=feasibility.inequality_value,
        ratio=_ratio(stitch.path.length, degree, g),
    )
    logger.info(
        "Stitched path of length %d over %d parts (floor %d)",
        stitch.path.length,
        certificate.t,
        stitch.guaranteed_floor,
    )
    return LongPathRun(stitch, provenance, certificate)

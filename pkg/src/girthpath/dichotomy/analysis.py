"""Long path or small dense subgraph: witness extraction and bound verification."""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any

from ..core.errors import (
    DichotomyError,
    EmptyDigraphError,
    InsufficientOutDegreeError,
    NotOrientedError,
    PreconditionError,
)
from ..graph.components import min_outdeg_strong_subgraph
from ..graph.digraph import (
    Digraph,
    InducedSubgraph,
    PathWitness,
    induced_subgraph,
    is_oriented,
    min_out_degree,
    prune_to_exact_outdegree,
)
from ..graph.girth import girth
from ..solvers.cycles import CycleBound, cycle_bound
from ..solvers.limits import SolverLimits
from ..solvers.longest import DEFAULT_LIMITS, enumerate_maximum_paths, longest_path_exact
from .bounds import BoundTable, bound_table
from .claims import (
    check_no_two_long_cycles,
    check_outneighbours_on_path,
    check_predecessors_stay_on_cycle,
    cycle_predecessors,
)
from .schemas import (
    BoundVerdict,
    ClaimCheck,
    DichotomyReport,
    Outcome,
    PathBoundsReport,
    Verdict,
)

logger = logging.getLogger(__name__)

NONZERO_BACK_INDEX = "nonzero_back_index"
CYCLE_LENGTH_FLOOR = "cycle_length_floor"
SHARPER_DEGREE_BOUND = "sharper_degree_bound"


@dataclass(frozen=True)
class ProofTrace:
    """Witness sets of the reduced digraph, all in input vertex ids.

    ``hypotheses_hold`` is True when the reduced digraph has no path of
    length 2δ; only then are the claims asserted.
    """

    reduced_vertices: tuple[int, ...]
    reduced_ell: int
    proof_path: PathWitness
    cycle_bound: int
    a_index: int
    hypotheses_hold: bool
    claims: tuple[ClaimCheck, ...]
    pivot: int | None = None
    pivot_neighbours: tuple[int, ...] = ()
    a_set: tuple[int, ...] = ()
    b_set: tuple[int, ...] = ()
    b_minus_set: tuple[int, ...] = ()
    s_vertices: tuple[int, ...] = ()
    s_min_outdeg: int | None = None
    s_min_outdeg_reduced: int | None = None


def reduce_to_proof_environment(digraph: Digraph, delta: int) -> InducedSubgraph:
    """Strongly connected subgraph with every out-degree exactly ``delta``.

    Takes a strong component with internal out-degree at least ``delta``,
    prunes it to exact out-degree ``delta`` and, since pruning can break strong
    connectivity, keeps a strong component of the result whose arcs all stay
    inside. ``vertices`` maps the result back to input ids.

    Raises:
        DichotomyError: If no component qualifies
    """
    component = min_outdeg_strong_subgraph(digraph, delta)
    if component is None:
        raise DichotomyError(f"No strong component has minimum out-degree {delta}")
    pruned = prune_to_exact_outdegree(component.digraph, delta)
    core = min_outdeg_strong_subgraph(pruned, delta)
    if core is None:
        raise DichotomyError("Pruned component has no strong component of full out-degree")
    vertices = tuple(component.vertices[v] for v in core.vertices)
    return InducedSubgraph(core.digraph, vertices)


def select_proof_path(digraph: Digraph, limits: SolverLimits = DEFAULT_LIMITS) -> CycleBound:
    """Maximum path with maximum cycle bound, ties to the smallest vertex sequence."""
    best: CycleBound | None = None
    for path in enumerate_maximum_paths(digraph, limits):
        candidate = cycle_bound(digraph, path)
        if best is None or (-candidate.bound, path.vertices) < (
            -best.bound,
            best.path.vertices,
        ):
            best = candidate
    if best is None:
        raise DichotomyError("No maximum path found")
    return best


def _relabel(check: ClaimCheck, table: tuple[int, ...], asserted: bool) -> ClaimCheck:
    witness = check.counterwitness
    if witness is not None:
        witness = tuple(tuple(table[v] for v in part) for part in witness)
    return replace(check, counterwitness=witness, asserted=asserted)


def trace_proof(
    digraph: Digraph, delta: int, limits: SolverLimits = DEFAULT_LIMITS
) -> ProofTrace:
    """Run the witness machinery on the reduced digraph of ``digraph``.

    Usable on any oriented digraph with δ⁺ ≥ δ ≥ 1; claims are asserted only
    when the reduced digraph has no path of length 2δ.

    Raises:
        PreconditionError: If delta < 1 or the digraph is not a valid input
    """
    if delta < 1:
        raise PreconditionError(f"Witness machinery needs delta >= 1, got {delta}")
    _check_dichotomy_input(digraph, delta)
    environment = reduce_to_proof_environment(digraph, delta)
    reduced = environment.digraph
    table = environment.vertices

    selected = select_proof_path(reduced, limits)
    path = selected.path
    a = selected.back_index
    hypotheses = path.length < 2 * delta

    claims = [
        ClaimCheck(
            NONZERO_BACK_INDEX,
            a != 0,
            None if a else (path.vertices,),
        ),
        check_no_two_long_cycles(reduced, delta, limits),
    ]
    trace: dict[str, Any] = {
        "reduced_vertices": table,
        "reduced_ell": path.length,
        "proof_path": PathWitness(tuple(table[v] for v in path.vertices)),
        "cycle_bound": selected.bound,
        "a_index": a,
        "hypotheses_hold": hypotheses,
    }
    if a == 0:
        trace["claims"] = tuple(_relabel(check, table, hypotheses) for check in claims)
        return ProofTrace(**trace)

    pivot = path.vertices[a - 1]
    heads = reduced.out_neighbours[pivot]
    prefix = set(path.vertices[:a])
    b_set, b_minus = cycle_predecessors(reduced, path, a)
    claims.append(check_outneighbours_on_path(reduced, path, a))
    claims.append(check_predecessors_stay_on_cycle(reduced, path, a))

    s_reduced = min_out_degree(induced_subgraph(reduced, b_minus).digraph) if b_minus else None
    s_vertices = tuple(sorted(table[v] for v in b_minus))
    s_degree = min_out_degree(induced_subgraph(digraph, s_vertices).digraph) if s_vertices else None

    # The vertex of S with fewest out-neighbours in S sends the rest into C − S
    claims.append(
        ClaimCheck(
            CYCLE_LENGTH_FLOOR,
            s_reduced is not None
            and selected.bound >= len(b_minus) - s_reduced + delta,
        )
    )

    trace.update(
        claims=tuple(_relabel(check, table, hypotheses) for check in claims),
        pivot=table[pivot],
        pivot_neighbours=tuple(sorted(table[v] for v in heads)),
        a_set=tuple(sorted(table[v] for v in heads if v in prefix)),
        b_set=tuple(sorted(table[v] for v in b_set)),
        b_minus_set=tuple(sorted(table[v] for v in b_minus)),
        s_vertices=s_vertices,
        s_min_outdeg=s_degree,
        s_min_outdeg_reduced=s_reduced,
    )
    return ProofTrace(**trace)


def _check_dichotomy_input(digraph: Digraph, delta: int) -> None:
    if digraph.vertex_count == 0:
        raise EmptyDigraphError("Dichotomy analysis needs a non-empty digraph")
    if not is_oriented(digraph):
        raise NotOrientedError("Dichotomy analysis needs an oriented graph")
    floor = min_out_degree(digraph)
    if floor < delta:
        raise InsufficientOutDegreeError(f"Minimum out-degree {floor} is below delta={delta}")


def analyze_dichotomy(
    digraph: Digraph, delta: int, limits: SolverLimits = DEFAULT_LIMITS
) -> DichotomyReport:
    """Either a path of length 2δ or a set S with |S| ≤ δ and δ⁺(S) ≥ 2δ − ℓ.

    Args:
        digraph: Oriented graph with minimum out-degree at least ``delta``
        delta: Out-degree floor δ
        limits: Exact-solver limits; the small-subgraph branch enumerates all
            maximum paths and needs DP scale

    Returns:
        DichotomyReport in input vertex ids

    Raises:
        NotOrientedError: If the digraph has a 2-cycle
        InsufficientOutDegreeError: If δ⁺(D) < delta
        ResourceLimitError: If the instance exceeds ``limits``
        DichotomyError: If the witness machinery reaches an impossible state
    """
    _check_dichotomy_input(digraph, delta)
    exact = longest_path_exact(digraph, limits)
    ell = exact.length

    if ell >= 2 * delta:
        logger.debug("Long path of length %d >= 2δ = %d", ell, 2 * delta)
        return DichotomyReport(delta, ell, exact.witness, Outcome.LONG_PATH)

    trace = trace_proof(digraph, delta, limits)
    if trace.a_index == 0:
        raise DichotomyError("Cycle of the maximum path starts at its first vertex")
    if not trace.s_vertices or trace.s_min_outdeg is None:
        raise DichotomyError("Pivot has no out-neighbour on the cycle")

    sharper = ClaimCheck(
        SHARPER_DEGREE_BOUND,
        trace.s_min_outdeg >= 2 * delta + 1 - ell,
        asserted=False,
    )
    report = DichotomyReport(
        delta=delta,
        ell=ell,
        best_path=exact.witness,
        outcome=Outcome.SMALL_SUBGRAPH,
        reduced_vertices=trace.reduced_vertices,
        reduced_ell=trace.reduced_ell,
        proof_path=trace.proof_path,
        cycle_bound=trace.cycle_bound,
        a_index=trace.a_index,
        pivot=trace.pivot,
        pivot_neighbours=trace.pivot_neighbours,
        a_set=trace.a_set,
        b_set=trace.b_set,
        b_minus_set=trace.b_minus_set,
        s_vertices=trace.s_vertices,
        s_min_outdeg=trace.s_min_outdeg,
        s_min_outdeg_reduced=trace.s_min_outdeg_reduced,
        claims=trace.claims + (sharper,),
    )
    problems = report.violations()
    if problems:
        logger.warning("Dichotomy report invariants broken: %s", "; ".join(problems))
    return report


def _verdict(applicable: bool, holds: bool) -> Verdict:
    if not applicable:
        return Verdict.NOT_APPLICABLE
    return Verdict.SATISFIED if holds else Verdict.VIOLATED


def _path_verdicts(
    table: BoundTable, ell: int, g: int | None, oriented: bool
) -> list[BoundVerdict]:
    finite_cycle = g is not None and g >= 3
    girth_at_least_4 = g is None or g >= 4
    large = table.large_girth_path_bound
    verdicts = [
        BoundVerdict(
            "girth_path_bound",
            table.girth_path_bound,
            _verdict(finite_cycle, ell >= table.girth_path_bound),
        ),
        BoundVerdict(
            "oriented_path_bound",
            table.oriented_path_bound,
            _verdict(oriented, ell >= table.oriented_path_bound),
        ),
        BoundVerdict(
            "girth4_path_bound",
            table.girth4_path_bound,
            _verdict(girth_at_least_4, ell >= table.girth4_path_bound),
        ),
        BoundVerdict(
            "large_girth_path_bound",
            large if g is not None else None,
            _verdict(g is not None and large is not None, large is not None and ell >= large),
        ),
        BoundVerdict(
            "closure",
            g - 1 if g is not None else None,
            _verdict(g is not None, g is not None and ell >= g - 1),
        ),
        BoundVerdict(
            "short_cycle_bound",
            table.short_cycle_bound,
            _verdict(table.delta >= 1, g is not None and g <= table.short_cycle_bound),
        ),
        BoundVerdict(
            "triangle_threshold",
            table.triangle_threshold,
            _verdict(oriented and table.delta >= table.triangle_threshold, g == 3),
        ),
    ]
    return verdicts


def _probes(table: BoundTable, ell: int, g: int | None, oriented: bool) -> dict[str, Any]:
    delta = table.delta
    return {
        "long_path_2delta": ell >= 2 * delta if oriented else None,
        "girth_path_conjecture": (
            ell >= table.girth_path_conjecture
            if table.girth_path_conjecture is not None
            else None
        ),
        "closure_strict": ell >= g if g is not None else None,
        "ratio_g_delta": Fraction(ell, g * delta) if g is not None and delta else None,
        "caccetta_haggkvist_cycle": (
            g is not None and g <= table.caccetta_haggkvist_cycle
            if table.caccetta_haggkvist_cycle is not None
            else None
        ),
        "caccetta_haggkvist_path": ell >= table.caccetta_haggkvist_path_bound,
    }


def verify_path_bounds(digraph: Digraph, limits: SolverLimits = DEFAULT_LIMITS) -> PathBoundsReport:
    """Compare exact ℓ, girth and δ⁺ against every applicable proven bound.

    The girth bound 2δ(1 − 1/g) is applied only for finite g ≥ 3, the
    oriented bound only to oriented graphs and the girth-4 bound in its
    non-strict form. Conjecture probes are recorded and never asserted.

    Raises:
        EmptyDigraphError: If the digraph has no vertices
        ResourceLimitError: If the instance exceeds ``limits``
    """
    exact = longest_path_exact(digraph, limits)
    shortest = girth(digraph)
    delta = min_out_degree(digraph)
    oriented = is_oriented(digraph)
    g = shortest.length

    table = bound_table(digraph.vertex_count, delta, g)
    verdicts = _path_verdicts(table, exact.length, g, oriented)
    report = PathBoundsReport(
        n=digraph.vertex_count,
        m=digraph.arc_count,
        delta=delta,
        girth=g,
        ell=exact.length,
        oriented=oriented,
        bounds=table,
        verdicts=tuple(verdicts),
        probes=_probes(table, exact.length, g, oriented),
    )
    if not report.passed:
        violated = [v.name for v in verdicts if v.verdict is Verdict.VIOLATED]
        logger.warning("Bounds violated: %s", ", ".join(violated))
    return report

"""Lift operation and the counterexample family built from complete digraphs."""

import logging

from ..core.errors import PreconditionError
from ..core.types import Arc
from ..graph.digraph import Digraph
from .schemas import CounterexampleParams, LiftSpec

logger = logging.getLogger(__name__)


def complete_digraph(m: int) -> Digraph:
    """All m(m − 1) ordered arcs on ``m`` vertices."""
    if m < 1:
        raise PreconditionError(f"Complete digraph needs at least one vertex, got {m}")
    return Digraph(m, tuple((u, v) for u in range(m) for v in range(m) if u != v))


def k_lift(digraph: Digraph, spec: LiftSpec, delta: int) -> Digraph:
    """Replace the out-arcs of ``spec.target_vertex`` by ``k`` complete layers.

    New layers of ``delta`` vertices receive consecutive ids after the existing
    ones. Layer ``i - 1`` is completely joined to layer ``i``; layer 0 is the
    target itself and layer ``k`` its old out-neighbourhood.

    Raises:
        PreconditionError: If some out-degree differs from ``delta``
        InvalidDigraphError: If the target vertex is out of range
    """
    digraph.check_vertex(spec.target_vertex)
    irregular = [
        v for v, heads in enumerate(digraph.out_neighbours) if len(heads) != delta
    ]
    if irregular:
        raise PreconditionError(
            f"Lift needs every out-degree equal to {delta}; vertex {irregular[0]} differs"
        )
    if spec.k == 1:
        return digraph

    target = spec.target_vertex
    n = digraph.vertex_count
    layers: list[list[int]] = [[target]]
    for i in range(1, spec.k):
        start = n + (i - 1) * delta
        layers.append(list(range(start, start + delta)))
    layers.append(list(digraph.out_neighbours[target]))

    arcs: list[Arc] = [(u, v) for u, v in digraph.arcs if u != target]
    for tails, heads in zip(layers, layers[1:], strict=False):
        arcs.extend((u, v) for u in tails for v in heads)

    logger.debug("Lifted vertex %d with k=%d (%d new vertices)", target, spec.k, (spec.k - 1) * delta)
    return Digraph(n + (spec.k - 1) * delta, tuple(sorted(arcs)))


def build_counterexample(params: CounterexampleParams) -> Digraph:
    """Complete digraph on δ + 1 vertices with vertex 0 a-lifted and
    vertices 1..δ b-lifted, in that order."""
    delta = params.delta
    digraph = complete_digraph(delta + 1)
    digraph = k_lift(digraph, LiftSpec(0, params.a), delta)
    for vertex in range(1, delta + 1):
        digraph = k_lift(digraph, LiftSpec(vertex, params.b), delta)
    return digraph


def counterexample_params_for_girth(g: int, delta: int) -> tuple[CounterexampleParams, int]:
    """Family member of girth ``g`` and the lower bound on its longest path.

    Even g uses a = b = g/2, odd g uses a = (g − 1)/2 and b = (g + 1)/2. The
    bound δb + a − 1 is checked against the closed even/odd formula.

    Raises:
        PreconditionError: If g < 2 or delta < 1
    """
    if g < 2:
        raise PreconditionError(f"Girth must be at least 2, got {g}")
    if delta < 1:
        raise PreconditionError(f"delta must be positive, got {delta}")

    if g % 2 == 0:
        params = CounterexampleParams(delta, g // 2, g // 2)
        closed_form = (g * delta + g - 2) // 2
    else:
        params = CounterexampleParams(delta, (g - 1) // 2, (g + 1) // 2)
        closed_form = ((g + 1) * delta + g - 3) // 2

    lower_bound = params.longest_path_lower_bound
    if lower_bound != closed_form:
        raise AssertionError(f"Bound {lower_bound} disagrees with closed form {closed_form}")
    return params, lower_bound

"""Verification suites: seeded corpora and per-instance checks.

Every suite builds a deterministic list of :class:`Case` objects and a runner
that turns one case into result rows. Runners are module-level functions so
cases can be shipped to worker processes.
"""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations

import numpy as np

from ..constructions.generator import generate
from ..constructions.lifts import build_counterexample, counterexample_params_for_girth
from ..constructions.schemas import CounterexampleParams, GenSpec, GraphKind
from ..core.errors import (
    ConvergenceError,
    GenerationError,
    InvalidPartitionError,
    ResourceLimitError,
)
from ..dichotomy.analysis import analyze_dichotomy, trace_proof, verify_path_bounds
from ..dichotomy.schemas import Outcome, Verdict
from ..graph.components import min_outdeg_strong_subgraph
from ..graph.digraph import Digraph
from ..graph.girth import girth
from ..partition.driver import find_long_path
from ..partition.resampling import (
    bad_event,
    c_prime_for_parts,
    lll_feasibility,
    partition_lll,
    verify_certificate,
)
from ..partition.schemas import LllConfig
from ..solvers.brute import brute_force_girth, brute_force_longest_path
from ..solvers.longest import longest_path_exact
from .schemas import Case, InstanceRow, SuiteRequest

logger = logging.getLogger(__name__)

FORMULA_MAX_VERTICES = 20
CLOSURE_EXHAUSTIVE_MAX_N = 5
CLOSURE_MASK_CHUNK = 1 << 14
CLOSURE_SAMPLED_N = 6
CLOSURE_SAMPLES = 10_000
CLOSURE_CHUNK = 512
ORACLE_INSTANCES = 500
ORACLE_CHUNK = 50
ORACLE_ARC_PROBABILITY = 0.3
ORIENTED_CORPUS_SIZE = 300
GIRTH_CORPUS_SIZE = 600
MAX_CORPUS_N = 12


@dataclass(frozen=True)
class Suite:
    """A named verification suite with its CSV columns."""

    name: str
    description: str
    columns: tuple[str, ...]
    probe_columns: tuple[str, ...]
    build_cases: Callable[[SuiteRequest], list[Case]]
    run_case: Callable[[Case], list[InstanceRow]]


def instance_seed(base: int, *path: int) -> int:
    """Independent 32-bit seed for one corpus member."""
    return int(np.random.SeedSequence([base, *path]).generate_state(1)[0])


def _case(request: SuiteRequest, case_id: str, **params: object) -> Case:
    return Case(request.suite, case_id, dict(params), request.limits, request.partition)


def _skipped(instance_id: str, error: Exception) -> InstanceRow:
    return InstanceRow(instance_id, "skipped", message=f"{type(error).__name__}: {error}")


# -- counterexample formulas -------------------------------------------------


def _formula_cases(request: SuiteRequest) -> list[Case]:
    cases = []
    for delta in (1, 2, 3):
        for a, b in combinations_with_replacement((1, 2, 3), 2):
            params = CounterexampleParams(delta, a, b)
            if params.vertex_count <= FORMULA_MAX_VERTICES:
                cases.append(_case(request, f"d{delta}-a{a}-b{b}", delta=delta, a=a, b=b))
    return cases


def _run_formula(case: Case) -> list[InstanceRow]:
    params = CounterexampleParams(case.params["delta"], case.params["a"], case.params["b"])
    digraph = build_counterexample(params)
    try:
        ell = longest_path_exact(digraph, case.limits).length
    except ResourceLimitError as e:
        return [_skipped(case.case_id, e)]
    g = girth(digraph).length
    lower_bound = params.longest_path_lower_bound
    problems = []
    if g != params.predicted_girth:
        problems.append(f"girth {g} != a + b = {params.predicted_girth}")
    if ell < lower_bound:
        problems.append(f"ell {ell} < δb + a − 1 = {lower_bound}")
    values = {
        "delta": params.delta,
        "a": params.a,
        "b": params.b,
        "n": digraph.vertex_count,
        "girth": g,
        "predicted_girth": params.predicted_girth,
        "ell": ell,
        "ell_lower_bound": lower_bound,
        "ell_excess": ell - lower_bound,
    }
    probes = {"ell_matches_lower_bound": ell == lower_bound}
    status = "fail" if problems else "pass"
    return [InstanceRow(case.case_id, status, values, probes, message="; ".join(problems))]


# -- counterexample family ---------------------------------------------------


def _family_cases(request: SuiteRequest) -> list[Case]:
    return [
        _case(request, f"g{g}-d{delta}", g=g, delta=delta)
        for g in range(4, 9)
        for delta in (1, 2, 3)
    ]


def _run_family(case: Case) -> list[InstanceRow]:
    g, delta = case.params["g"], case.params["delta"]
    params, lower_bound = counterexample_params_for_girth(g, delta)
    if params.vertex_count > case.limits.max_bb_vertices:
        return [
            InstanceRow(
                case.case_id,
                "skipped",
                {"g": g, "delta": delta, "n": params.vertex_count},
                message="exceeds solver limits",
            )
        ]
    digraph = build_counterexample(params)
    try:
        ell = longest_path_exact(digraph, case.limits).length
    except ResourceLimitError as e:
        return [_skipped(case.case_id, e)]

    measured_girth = girth(digraph).length
    problems = []
    if measured_girth != g:
        problems.append(f"girth {measured_girth} != {g}")
    if ell < lower_bound:
        problems.append(f"ell {ell} < {lower_bound}")
    values = {
        "g": g,
        "delta": delta,
        "a": params.a,
        "b": params.b,
        "n": digraph.vertex_count,
        "girth": measured_girth,
        "ell": ell,
        "ell_lower_bound": lower_bound,
        "conjecture_bound": params.girth_path_conjecture_bound,
    }
    # Whether the member refutes δ(g − 1) depends on the measured ℓ only
    probes = {"refutes_conjecture": params.refutes_girth_path_conjecture(ell)}
    status = "fail" if problems else "pass"
    return [InstanceRow(case.case_id, status, values, probes, message="; ".join(problems))]


# -- random corpora ----------------------------------------------------------


def _oriented_cases(request: SuiteRequest, default: int) -> list[Case]:
    count = request.instance_count or default
    cases = []
    for index in range(count):
        delta = 1 + index % 3
        span = MAX_CORPUS_N - 2 * delta
        n = 2 * delta + 1 + (index // 3) % span
        seed = instance_seed(request.seed, index)
        cases.append(
            _case(request, f"oriented-{index:04d}", kind="oriented", n=n, delta=delta, seed=seed)
        )
    return cases


def _oriented_corpus(request: SuiteRequest) -> list[Case]:
    return _oriented_cases(request, ORIENTED_CORPUS_SIZE)


def _strong_oriented_instance(case: Case) -> Digraph:
    """Strong component of a random oriented graph keeping out-degree δ."""
    delta = case.params["delta"]
    spec = GenSpec(GraphKind.ORIENTED_MIN_OUTDEG, case.params["n"], delta, case.params["seed"])
    component = min_outdeg_strong_subgraph(generate(spec), delta)
    if component is None:
        raise GenerationError(f"No strong component with out-degree {delta}")
    return component.digraph


def _girth_cases(request: SuiteRequest) -> list[Case]:
    count = request.instance_count or GIRTH_CORPUS_SIZE
    cases = []
    for index in range(count):
        delta = 1 + (index // 2) % 3
        seed = instance_seed(request.seed, index)
        if index % 2:
            span = MAX_CORPUS_N - 2 * delta
            n = 2 * delta + 1 + (index // 6) % span
            kind = "oriented"
        else:
            span = MAX_CORPUS_N - delta
            n = delta + 1 + (index // 6) % span
            kind = "out_regular"
        cases.append(_case(request, f"{kind}-{index:04d}", kind=kind, n=n, delta=delta, seed=seed))
    return cases


def _corpus_instance(case: Case) -> Digraph:
    if case.params["kind"] == "oriented":
        return _strong_oriented_instance(case)
    spec = GenSpec(GraphKind.OUT_REGULAR, case.params["n"], case.params["delta"], case.params["seed"])
    return generate(spec)


def _run_bounds(case: Case, required: str) -> list[InstanceRow]:
    try:
        digraph = _corpus_instance(case)
        report = verify_path_bounds(digraph, case.limits)
    except (ResourceLimitError, GenerationError) as e:
        return [_skipped(case.case_id, e)]

    values = {
        "kind": case.params["kind"],
        "n": report.n,
        "m": report.m,
        "delta": report.delta,
        "girth": report.girth,
        "ell": report.ell,
        "bound": report.bounds.to_dict()[required],
        "verdict": report.verdict(required).value,
    }
    if report.verdict(required) is Verdict.NOT_APPLICABLE:
        status = "not-applicable"
    else:
        status = "pass" if report.passed else "fail"
    violated = [v.name for v in report.verdicts if v.verdict is Verdict.VIOLATED]
    return [
        InstanceRow(
            case.case_id,
            status,
            values,
            dict(report.probes),
            message=", ".join(violated),
        )
    ]


def _run_oriented_bound(case: Case) -> list[InstanceRow]:
    return _run_bounds(case, "oriented_path_bound")


def _run_girth_bound(case: Case) -> list[InstanceRow]:
    return _run_bounds(case, "girth_path_bound")


# -- dichotomy ---------------------------------------------------------------


def _run_dichotomy(case: Case) -> list[InstanceRow]:
    delta = case.params["delta"]
    try:
        digraph = _strong_oriented_instance(case)
        report = analyze_dichotomy(digraph, delta, case.limits)
        claims = report.claims
        if report.outcome is Outcome.LONG_PATH:
            trace = trace_proof(digraph, delta, case.limits)
            claims = trace.claims
            hypotheses = trace.hypotheses_hold
        else:
            hypotheses = True
    except (ResourceLimitError, GenerationError) as e:
        return [_skipped(case.case_id, e)]

    problems = report.violations()
    problems.extend(f"claim {c.claim} failed" for c in claims if c.failed)
    values = {
        "n": digraph.vertex_count,
        "delta": delta,
        "ell": report.ell,
        "outcome": report.outcome.value,
        "s_size": len(report.s_vertices) if report.outcome is Outcome.SMALL_SUBGRAPH else None,
        "s_min_outdeg": report.s_min_outdeg,
        "hypotheses_hold": hypotheses,
        "claims_failed": sum(1 for c in claims if c.failed),
    }
    probes = {f"claim_{c.claim}": c.holds for c in claims if not c.asserted}
    status = "fail" if problems else "pass"
    return [InstanceRow(case.case_id, status, values, probes, message="; ".join(problems))]


# -- closure -----------------------------------------------------------------


def _closure_cases(request: SuiteRequest) -> list[Case]:
    cases = []
    for n in range(2, CLOSURE_EXHAUSTIVE_MAX_N + 1):
        total = 1 << (n * (n - 1))
        for start in range(0, total, CLOSURE_MASK_CHUNK):
            stop = min(start + CLOSURE_MASK_CHUNK, total)
            cases.append(
                _case(request, f"n{n}-{start}", mode="exhaustive", n=n, start=start, stop=stop)
            )
    samples = request.instance_count or CLOSURE_SAMPLES
    for start in range(0, samples, CLOSURE_CHUNK):
        stop = min(start + CLOSURE_CHUNK, samples)
        cases.append(
            _case(
                request,
                f"n{CLOSURE_SAMPLED_N}-s{start}",
                mode="sampled",
                n=CLOSURE_SAMPLED_N,
                start=start,
                stop=stop,
                seed=request.seed,
            )
        )
    return cases


def canonical_masks(n: int, start: int, stop: int) -> np.ndarray:
    """Arc masks in ``[start, stop)`` that are the least mask of their isomorphism class.

    Bit k of a mask is the k-th ordered pair (u, v), u ≠ v, in row-major order.
    Masks with a vertex of out-degree 0 are dropped. Every isomorphism class of
    digraphs on n vertices with positive out-degrees has its least mask in
    exactly one window, so the windows of ``[0, 2^(n(n−1)))`` cover each class once.
    """
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    position = {pair: k for k, pair in enumerate(pairs)}
    tails = np.array([u for u, _ in pairs])

    masks = np.arange(start, stop, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1
    keep = np.ones(masks.size, dtype=bool)
    for u in range(n):
        keep &= bits[:, tails == u].any(axis=1)
    masks, bits = masks[keep], bits[keep]

    least = np.ones(masks.size, dtype=bool)
    for perm in permutations(range(n)):
        moved = np.array([position[(perm[u], perm[v])] for u, v in pairs], dtype=np.int64)
        least &= masks <= (bits << moved).sum(axis=1)
    return masks[least]


def _closure_digraphs(params: dict[str, int | str]) -> Iterator[tuple[str, Digraph]]:
    """Digraphs on n vertices with every out-degree at least 1."""
    n = int(params["n"])
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    start, stop = int(params["start"]), int(params["stop"])

    if params["mode"] == "exhaustive":
        for mask in canonical_masks(n, start, stop).tolist():
            arcs = tuple(pair for k, pair in enumerate(pairs) if (mask >> k) & 1)
            yield f"n{n}-m{mask}", Digraph(n, arcs)
        return

    for index in range(start, stop):
        rng = np.random.default_rng([int(params["seed"]), index])
        arcs_list = []
        for u in range(n):
            others = [v for v in range(n) if v != u]
            chosen = int(rng.integers(1, 1 << (n - 1)))
            arcs_list.extend((u, v) for k, v in enumerate(others) if (chosen >> k) & 1)
        yield f"n{n}-s{index}", Digraph(n, tuple(sorted(arcs_list)))


def _run_closure(case: Case) -> list[InstanceRow]:
    rows = []
    mode = str(case.params["mode"])
    for instance_id, digraph in _closure_digraphs(case.params):
        ell = longest_path_exact(digraph, case.limits).length
        g = girth(digraph).length
        ok = g is not None and ell >= g - 1
        values = {
            "mode": mode,
            "n": digraph.vertex_count,
            "m": digraph.arc_count,
            "girth": g,
            "ell": ell,
        }
        rows.append(
            InstanceRow(
                instance_id,
                "pass" if ok else "fail",
                values,
                {"closure_strict": g is not None and ell >= g},
            )
        )
    return rows


# -- partition and stitch ----------------------------------------------------


def _partition_cases(request: SuiteRequest) -> list[Case]:
    settings = request.partition
    return [
        _case(
            request,
            f"d{d}-n{factor * d}",
            n=factor * d,
            d=d,
            seed=instance_seed(request.seed, d, factor),
        )
        for d in settings.degrees
        for factor in settings.size_factors
    ]


def _cd_instance(case: Case) -> Digraph:
    spec = GenSpec(
        GraphKind.CD_REGULAR, case.params["n"], case.params["d"], case.params["seed"], case.partition.C
    )
    return generate(spec)


def _run_partition(case: Case) -> list[InstanceRow]:
    settings = case.partition
    d = case.params["d"]
    try:
        digraph = _cd_instance(case)
    except GenerationError as e:
        return [_skipped(case.case_id, e)]

    cfg = LllConfig(
        settings.C,
        d,
        c_prime_for_parts(d, settings.parts),
        case.params["seed"],
        settings.max_resample_rounds,
    )
    try:
        certificate = partition_lll(digraph, cfg)
    except ConvergenceError as e:
        return [InstanceRow(case.case_id, "fail", {"n": digraph.vertex_count, "d": d}, message=str(e))]
    failures = verify_certificate(digraph, certificate)
    members = [frozenset(part) for part in certificate.parts]
    bad = sum(
        bad_event(digraph, vertex, part, certificate.t)
        for vertex in range(digraph.vertex_count)
        for part in members
    )
    if bad:
        failures.append(f"{bad} bad events remain")
    if not certificate.valid:
        failures.append("certificate marked invalid")

    values = {
        "n": digraph.vertex_count,
        "d": d,
        "C": settings.C,
        "t": certificate.t,
        "c_prime": cfg.c_prime,
        "degree_floor": round(certificate.degree_floor, 4),
        "required_degree": certificate.required_degree,
        "min_cross_degree": certificate.min_cross_degree,
        "rounds": certificate.resample_rounds_used,
        "sizes": "/".join(str(size) for size in certificate.sizes),
        "inequality_value": lll_feasibility(cfg).inequality_value,
    }
    status = "fail" if failures else "pass"
    return [InstanceRow(case.case_id, status, values, message="; ".join(failures))]


def _run_stitch(case: Case) -> list[InstanceRow]:
    settings = case.partition
    d = case.params["d"]
    try:
        digraph = _cd_instance(case)
    except GenerationError as e:
        return [_skipped(case.case_id, e)]

    try:
        run = find_long_path(
            digraph,
            settings.C,
            d=d,
            c_prime=c_prime_for_parts(d, settings.parts),
            seed=case.params["seed"],
            max_resample_rounds=settings.max_resample_rounds,
            require_inequality=False,
        )
    except (ConvergenceError, InvalidPartitionError) as e:
        return [InstanceRow(case.case_id, "fail", {"n": digraph.vertex_count, "d": d}, message=str(e))]

    stitch = run.stitch
    problems = stitch.problems() + stitch.path.check(digraph)
    if run.certificate is None:
        problems.append(f"fell back to one part: {run.provenance.fallback_reason}")
    else:
        offset = 0
        for index, (length, part) in enumerate(
            zip(stitch.segment_lengths, run.certificate.parts, strict=True)
        ):
            segment = stitch.path.vertices[offset : offset + length + 1]
            if not set(segment) <= set(part):
                problems.append(f"segment {index + 1} leaves its part")
            offset += length + 1

    g = stitch.girth
    values = {
        "n": digraph.vertex_count,
        "d": d,
        "t": stitch.t,
        "girth": g,
        "length": stitch.path.length,
        "guaranteed_floor": stitch.guaranteed_floor,
        "segment_lengths": "/".join(str(length) for length in stitch.segment_lengths),
        "c": run.provenance.c,
        "target": stitch.target,
        "ratio": run.provenance.ratio,
    }
    probes = {
        "segments_reach_girth": g is not None and min(stitch.segment_lengths) >= g,
        "meets_target": stitch.target is not None and stitch.path.length >= stitch.target,
    }
    status = "fail" if problems else "pass"
    return [InstanceRow(case.case_id, status, values, probes, message="; ".join(problems))]


# -- oracle ------------------------------------------------------------------


def _oracle_cases(request: SuiteRequest) -> list[Case]:
    count = request.instance_count or ORACLE_INSTANCES
    cases = []
    for kind in ("longest", "girth"):
        for start in range(0, count, ORACLE_CHUNK):
            stop = min(start + ORACLE_CHUNK, count)
            cases.append(
                _case(request, f"{kind}-{start}", kind=kind, start=start, stop=stop, seed=request.seed)
            )
    return cases


def random_digraph(
    rng: np.random.Generator, max_n: int, arc_probability: float = ORACLE_ARC_PROBABILITY
) -> Digraph:
    """Random digraph on 1..max_n vertices, each ordered pair an arc independently."""
    n = int(rng.integers(1, max_n + 1))
    adjacency = rng.random((n, n)) < arc_probability
    np.fill_diagonal(adjacency, False)
    tails, heads = np.nonzero(adjacency)
    return Digraph(n, tuple(zip(tails.tolist(), heads.tolist(), strict=True)))


def _oracle_check(kind: str, digraph: Digraph, case: Case) -> tuple[bool, int | None, int | None]:
    """(agrees, measured, expected) for one oracle instance."""
    if kind == "longest":
        exact = longest_path_exact(digraph, case.limits)
        expected = brute_force_longest_path(digraph)
        ok = exact.length == expected and not exact.witness.check(digraph)
        return ok and exact.witness.length == exact.length, exact.length, expected

    result = girth(digraph)
    expected_girth = brute_force_girth(digraph)
    ok = result.length == expected_girth
    if result.witness is not None:
        ok = ok and not result.witness.check(digraph) and result.witness.length == result.length
    return ok, result.length, expected_girth


def _run_oracle(case: Case) -> list[InstanceRow]:
    kind = case.params["kind"]
    kind_index = 0 if kind == "longest" else 1
    max_n = 6 if kind == "longest" else 8
    rows = []
    for index in range(case.params["start"], case.params["stop"]):
        rng = np.random.default_rng([case.params["seed"], kind_index, index])
        digraph = random_digraph(rng, max_n)
        ok, measured, expected = _oracle_check(kind, digraph, case)
        values = {
            "kind": kind,
            "n": digraph.vertex_count,
            "m": digraph.arc_count,
            "measured": measured,
            "expected": expected,
        }
        rows.append(InstanceRow(f"{kind}-{index:03d}", "pass" if ok else "fail", values))
    return rows


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            "counterexample-formulas",
            "Girth a+b and longest path at least δb+a−1 on every small lifted family member",
            ("delta", "a", "b", "n", "girth", "predicted_girth", "ell", "ell_lower_bound",
             "ell_excess"),
            ("ell_matches_lower_bound",),
            _formula_cases,
            _run_formula,
        ),
        Suite(
            "counterexample-family",
            "Family members of girth 4..8 measured against δ(g−1)",
            ("g", "delta", "a", "b", "n", "girth", "ell", "ell_lower_bound",
             "conjecture_bound"),
            ("refutes_conjecture",),
            _family_cases,
            _run_family,
        ),
        Suite(
            "oriented-bound",
            "ℓ ≥ 1.5δ on random strongly connected oriented graphs",
            ("kind", "n", "m", "delta", "girth", "ell", "bound", "verdict"),
            ("long_path_2delta", "girth_path_conjecture", "closure_strict", "ratio_g_delta"),
            _oriented_corpus,
            _run_oriented_bound,
        ),
        Suite(
            "girth-bound",
            "ℓ ≥ 2δ(1 − 1/g) on random digraphs of finite girth g ≥ 3",
            ("kind", "n", "m", "delta", "girth", "ell", "bound", "verdict"),
            ("girth_path_conjecture", "closure_strict", "ratio_g_delta", "caccetta_haggkvist_path"),
            _girth_cases,
            _run_girth_bound,
        ),
        Suite(
            "dichotomy",
            "Long path or small dense subgraph, with the structural claims",
            ("n", "delta", "ell", "outcome", "s_size", "s_min_outdeg",
             "hypotheses_hold", "claims_failed"),
            (
                "claim_nonzero_back_index",
                "claim_no_two_long_cycles",
                "claim_outneighbours_on_path",
                "claim_predecessors_stay_on_cycle",
                "claim_cycle_length_floor",
                "claim_sharper_degree_bound",
            ),
            _oriented_corpus,
            _run_dichotomy,
        ),
        Suite(
            "closure",
            "ℓ ≥ g − 1 on every digraph up to 5 vertices with positive out-degrees",
            ("mode", "n", "m", "girth", "ell"),
            ("closure_strict",),
            _closure_cases,
            _run_closure,
        ),
        Suite(
            "partition",
            "Resampled partitions of (C, d)-regular digraphs verified by recount",
            ("n", "d", "C", "t", "c_prime", "degree_floor", "required_degree",
             "min_cross_degree", "rounds", "sizes", "inequality_value"),
            (),
            _partition_cases,
            _run_partition,
        ),
        Suite(
            "stitch",
            "Stitched paths reach t(g − 1) + t − 1",
            ("n", "d", "t", "girth", "length", "guaranteed_floor", "segment_lengths",
             "c", "target", "ratio"),
            ("segments_reach_girth", "meets_target"),
            _partition_cases,
            _run_stitch,
        ),
        Suite(
            "oracle",
            "Exact solvers agree with exhaustive enumeration",
            ("kind", "n", "m", "measured", "expected"),
            (),
            _oracle_cases,
            _run_oracle,
        ),
    )
}


def run_case(case: Case) -> list[InstanceRow]:
    """Run one case of any suite; the entry point for worker processes."""
    return SUITES[case.suite].run_case(case)

"""Tests for the dichotomy analysis and path-bound verification."""

from fractions import Fraction

import pytest

from girthpath.constructions import CounterexampleParams, build_counterexample
from girthpath.core.errors import (
    DichotomyError,
    EmptyDigraphError,
    InsufficientOutDegreeError,
    NotOrientedError,
    PreconditionError,
)
from girthpath.dichotomy import (
    ClaimCheck,
    DichotomyReport,
    Outcome,
    ProofTrace,
    Verdict,
    analyze_dichotomy,
    reduce_to_proof_environment,
    select_proof_path,
    trace_proof,
    verify_path_bounds,
)
from girthpath.graph import Digraph, PathWitness, is_strongly_connected
from girthpath.solvers import LongestPath


@pytest.fixture
def d12():
    """Counterexample with δ = 2, a = 1, b = 2: ℓ = 5 > 2δ."""
    return build_counterexample(CounterexampleParams(delta=2, a=1, b=2))


def _synthetic_trace(a_index: int = 2) -> ProofTrace:
    return ProofTrace(
        reduced_vertices=tuple(range(7)),
        reduced_ell=3,
        proof_path=PathWitness((0, 1, 2, 3)),
        cycle_bound=2,
        a_index=a_index,
        hypotheses_hold=True,
        claims=(ClaimCheck("nonzero_back_index", True),),
        pivot=1,
        pivot_neighbours=(5, 6),
        a_set=(5,),
        b_set=(6,),
        b_minus_set=(4,),
        s_vertices=(4,),
        s_min_outdeg=1,
        s_min_outdeg_reduced=1,
    )


class TestAnalyzeDichotomy:
    """Test the long-path/dense-subgraph dichotomy."""

    def test_triangle_has_a_long_path(self, triangle):
        report = analyze_dichotomy(triangle, 1)

        assert report.outcome is Outcome.LONG_PATH
        assert report.ell == 2
        assert report.violations() == []

    def test_counterexample_meets_two_delta(self, d12):
        report = analyze_dichotomy(d12, 2)

        assert report.outcome is Outcome.LONG_PATH
        assert report.ell == 5
        assert report.best_path.check(d12) == []

    def test_repeated_runs_agree(self, rotational_tournament):
        first = analyze_dichotomy(rotational_tournament, 3)

        assert analyze_dichotomy(rotational_tournament, 3) == first

    def test_rejects_two_cycles(self, two_cycle):
        with pytest.raises(NotOrientedError):
            analyze_dichotomy(two_cycle, 1)

    def test_rejects_low_out_degree(self, triangle):
        with pytest.raises(InsufficientOutDegreeError):
            analyze_dichotomy(triangle, 2)

    def test_rejects_empty_digraph(self):
        with pytest.raises(EmptyDigraphError):
            analyze_dichotomy(Digraph.empty(), 1)

    def test_small_subgraph_branch(self, mocker, rotational_tournament):
        """A path shorter than 2δ routes through the witness machinery."""
        mocker.patch(
            "girthpath.dichotomy.analysis.longest_path_exact",
            return_value=LongestPath(3, PathWitness((0, 1, 2, 3)), "subset-dp"),
        )
        mocker.patch("girthpath.dichotomy.analysis.trace_proof", return_value=_synthetic_trace())

        report = analyze_dichotomy(rotational_tournament, 2)

        assert report.outcome is Outcome.SMALL_SUBGRAPH
        assert report.s_vertices == (4,)
        assert report.violations() == []
        sharper = report.claims[-1]
        assert sharper.claim == "sharper_degree_bound"
        assert not sharper.holds
        assert not sharper.asserted
        data = report.to_dict()
        assert data["S"] == [4]
        assert data["outcome"] == "SmallSubgraph"

    def test_zero_back_index_is_impossible(self, mocker, rotational_tournament):
        mocker.patch(
            "girthpath.dichotomy.analysis.longest_path_exact",
            return_value=LongestPath(3, PathWitness((0, 1, 2, 3)), "subset-dp"),
        )
        mocker.patch(
            "girthpath.dichotomy.analysis.trace_proof",
            return_value=_synthetic_trace(a_index=0),
        )

        with pytest.raises(DichotomyError):
            analyze_dichotomy(rotational_tournament, 2)


class TestDichotomyReport:
    """Test report invariants on synthetic reports."""

    def test_oversized_subgraph_is_flagged(self):
        report = DichotomyReport(
            delta=1,
            ell=1,
            best_path=PathWitness((0, 1)),
            outcome=Outcome.SMALL_SUBGRAPH,
            pivot_neighbours=(2,),
            b_set=(2,),
            b_minus_set=(1,),
            s_vertices=(1, 3),
            s_min_outdeg=1,
        )

        problems = report.violations()

        assert any("exceeds delta" in problem for problem in problems)

    def test_outcome_must_match_ell(self):
        report = DichotomyReport(1, 1, PathWitness((0, 1)), Outcome.LONG_PATH)

        assert report.violations() == ["outcome LongPath disagrees with ell=1"]

    def test_failed_claim_is_reported(self):
        report = DichotomyReport(
            delta=1,
            ell=2,
            best_path=PathWitness((0, 1, 2)),
            outcome=Outcome.LONG_PATH,
            claims=(ClaimCheck("outneighbours_on_path", False, ((5,),)),),
        )

        assert report.violations() == ["claim outneighbours_on_path failed"]


class TestProofTrace:
    """Test the witness machinery on real inputs."""

    def test_reduced_digraph_is_strong_and_regular(self, d23):
        environment = reduce_to_proof_environment(d23, 2)

        assert is_strongly_connected(environment.digraph)
        assert all(len(heads) == 2 for heads in environment.digraph.out_neighbours)

    def test_reduction_fails_without_a_component(self, path_digraph):
        with pytest.raises(DichotomyError):
            reduce_to_proof_environment(path_digraph, 1)

    def test_selected_path_has_maximum_cycle_bound(self, triangle):
        selected = select_proof_path(triangle)

        assert selected.path.length == 2
        assert selected.bound == 3
        assert selected.path.vertices == (0, 1, 2)

    def test_claims_are_recorded_but_not_asserted_on_long_paths(self, d12):
        trace = trace_proof(d12, 2)

        assert not trace.hypotheses_hold
        assert trace.reduced_ell >= 4
        assert trace.proof_path.check(d12) == []
        assert all(not check.asserted for check in trace.claims)

    def test_needs_positive_delta(self, triangle):
        with pytest.raises(PreconditionError):
            trace_proof(triangle, 0)


class TestVerifyPathBounds:
    """Test bound verdicts on exact values."""

    def test_triangle(self, triangle):
        report = verify_path_bounds(triangle)

        assert (report.delta, report.girth, report.ell) == (1, 3, 2)
        assert report.passed
        assert report.verdict("girth_path_bound") is Verdict.SATISFIED
        assert report.verdict("oriented_path_bound") is Verdict.SATISFIED
        assert report.verdict("girth4_path_bound") is Verdict.NOT_APPLICABLE
        assert report.verdict("triangle_threshold") is Verdict.NOT_APPLICABLE
        assert report.probes["long_path_2delta"] is True
        assert report.probes["closure_strict"] is False
        assert report.probes["ratio_g_delta"] == Fraction(2, 3)

    def test_counterexample_reaches_the_girth_conjecture(self, d22):
        """ℓ = 6 meets δ(g − 1) = 6 exactly."""
        report = verify_path_bounds(d22)

        assert (report.girth, report.ell) == (4, 6)
        assert report.passed
        assert report.verdict("girth_path_bound") is Verdict.SATISFIED
        assert report.verdict("girth4_path_bound") is Verdict.SATISFIED
        assert report.probes["girth_path_conjecture"] is True

    def test_two_cycle(self, two_cycle):
        report = verify_path_bounds(two_cycle)

        assert report.verdict("girth_path_bound") is Verdict.NOT_APPLICABLE
        assert report.verdict("oriented_path_bound") is Verdict.NOT_APPLICABLE
        assert report.verdict("closure") is Verdict.SATISFIED

    def test_acyclic_digraph(self, path_digraph):
        report = verify_path_bounds(path_digraph)

        assert report.girth is None
        assert report.verdict("closure") is Verdict.NOT_APPLICABLE
        assert report.verdict("short_cycle_bound") is Verdict.NOT_APPLICABLE
        assert report.probes["ratio_g_delta"] is None

    def test_to_dict(self, triangle):
        data = verify_path_bounds(triangle).to_dict()

        assert data["bounds"]["oriented_path_bound"]["verdict"] == "satisfied"
        assert "bound_table" in data
        assert "conjecture_probes" in data

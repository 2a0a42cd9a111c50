"""Tests for suite corpora and runners."""

from itertools import permutations

import networkx as nx
import numpy as np
import pytest

from girthpath.workflows import SuiteRequest, VerificationWorkflow
from girthpath.workflows.suites import (
    CLOSURE_EXHAUSTIVE_MAX_N,
    CLOSURE_SAMPLED_N,
    SUITES,
    canonical_masks,
    random_digraph,
)


def _pairs(n):
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _positive_outdegree_classes(n):
    """Isomorphism classes counted with networkx over every labelled digraph."""
    pairs = _pairs(n)
    buckets: dict[str, list[nx.DiGraph]] = {}
    for mask in range(1 << len(pairs)):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(pair for k, pair in enumerate(pairs) if (mask >> k) & 1)
        if any(graph.out_degree(v) == 0 for v in range(n)):
            continue
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(graph), [])
        if not any(nx.is_isomorphic(graph, other) for other in bucket):
            bucket.append(graph)
    return sum(len(bucket) for bucket in buckets.values())


class TestCanonicalMasks:
    """Test the isomorphism-reduced enumeration of small digraphs."""

    def test_two_vertices(self):
        assert canonical_masks(2, 0, 4).tolist() == [3]

    def test_three_vertices(self):
        """3-cycle, a 2-cycle fed by the third vertex, and the dense classes."""
        assert len(canonical_masks(3, 0, 1 << 6)) == 7

    def test_matches_networkx_on_four_vertices(self):
        assert len(canonical_masks(4, 0, 1 << 12)) == _positive_outdegree_classes(4)

    def test_windows_cover_each_class_once(self):
        whole = canonical_masks(4, 0, 1 << 12)
        split = np.concatenate(
            [
                canonical_masks(4, start, min(start + 1000, 1 << 12))
                for start in range(0, 1 << 12, 1000)
            ]
        )

        assert split.tolist() == whole.tolist()

    def test_masks_are_least_in_their_class(self):
        pairs = _pairs(3)
        position = {pair: k for k, pair in enumerate(pairs)}
        for mask in canonical_masks(3, 0, 1 << 6).tolist():
            for perm in permutations(range(3)):
                image = sum(
                    1 << position[(perm[u], perm[v])]
                    for k, (u, v) in enumerate(pairs)
                    if (mask >> k) & 1
                )
                assert mask <= image


class TestClosureCorpus:
    """Test the closure sweep layout."""

    def test_exhaustive_up_to_five_then_sampled(self):
        cases = SUITES["closure"].build_cases(SuiteRequest(suite="closure", instance_count=20))

        exhaustive = {case.params["n"] for case in cases if case.params["mode"] == "exhaustive"}
        sampled = {case.params["n"] for case in cases if case.params["mode"] == "sampled"}
        assert exhaustive == set(range(2, CLOSURE_EXHAUSTIVE_MAX_N + 1)) == {2, 3, 4, 5}
        assert sampled == {CLOSURE_SAMPLED_N} == {6}

    def test_rows_state_the_mode(self):
        suite = SUITES["closure"]
        request = SuiteRequest(suite="closure", instance_count=3)
        cases = [case for case in suite.build_cases(request) if case.params["n"] in (3, 6)]

        rows = [row for case in cases for row in suite.run_case(case)]

        modes = {row.values["mode"] for row in rows}
        assert modes == {"exhaustive", "sampled"}
        assert sum(1 for row in rows if row.values["n"] == 3) == 7
        assert all(row.status == "pass" for row in rows)

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_full_sweep_passes(self):
        result = await VerificationWorkflow().execute_workflow(
            SuiteRequest(suite="closure", instance_count=50)
        )

        assert result.success is True
        assert result.count("fail") == 0
        assert {row.values["n"] for row in result.rows} == {2, 3, 4, 5, 6}


class TestOracleCorpus:
    """Test the random oracle instances."""

    def test_arc_probability_is_three_tenths(self):
        rng = np.random.default_rng(0)
        arcs = pairs = 0
        for _ in range(2000):
            digraph = random_digraph(rng, 8)
            arcs += digraph.arc_count
            pairs += digraph.vertex_count * (digraph.vertex_count - 1)

        assert arcs / pairs == pytest.approx(0.3, abs=0.02)

    def test_no_arcs_at_zero_probability(self):
        digraph = random_digraph(np.random.default_rng(1), 6, arc_probability=0.0)

        assert digraph.arc_count == 0

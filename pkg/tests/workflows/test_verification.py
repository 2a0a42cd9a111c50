"""Tests for the verification suite workflow."""

import json
from unittest.mock import AsyncMock, patch

import pytest

from girthpath.workflows import InstanceRow, SuiteRequest, VerificationWorkflow


class TestVerificationWorkflow:
    """Test the verification suite workflow."""

    @pytest.fixture
    def workflow(self):
        """Create a workflow instance for testing."""
        return VerificationWorkflow()

    @pytest.fixture
    def suite_request(self, small_limits):
        return SuiteRequest(suite="oracle", seed=1, limits=small_limits, instance_count=10)

    @pytest.mark.asyncio
    async def test_complete_workflow_success(self, workflow, suite_request):
        """All steps run and no artifacts are written without an output directory."""
        rows = [InstanceRow("longest-000", "pass"), InstanceRow("girth-000", "pass")]
        with patch.multiple(
            workflow,
            _build_corpus=AsyncMock(return_value=[]),
            _run_cases=AsyncMock(return_value=rows),
            _aggregate=AsyncMock(return_value={}),
            _write_artifacts=AsyncMock(),
        ):
            result = await workflow.execute_workflow(suite_request)

            assert result.success is True
            assert result.suite == "oracle"
            assert result.rows == rows
            assert result.steps_completed == ["build_corpus", "run_cases", "aggregate"]
            workflow._write_artifacts.assert_not_called()

    @pytest.mark.asyncio
    async def test_failed_rows_fail_the_suite(self, workflow, suite_request):
        rows = [InstanceRow("a", "pass"), InstanceRow("b", "fail", message="mismatch")]
        with patch.multiple(
            workflow,
            _build_corpus=AsyncMock(return_value=[]),
            _run_cases=AsyncMock(return_value=rows),
            _aggregate=AsyncMock(return_value={}),
        ):
            result = await workflow.execute_workflow(suite_request)

            assert result.success is False
            assert result.failures == [rows[1]]
            assert result.error is None
            assert "❌ 1 failures" in workflow.get_progress()["completed_steps"]

    @pytest.mark.asyncio
    async def test_workflow_failure_in_run_cases(self, workflow, suite_request):
        """An exception in a step is reported, with the steps that finished."""
        with patch.multiple(
            workflow,
            _build_corpus=AsyncMock(return_value=[]),
            _run_cases=AsyncMock(side_effect=RuntimeError("worker died")),
        ):
            result = await workflow.execute_workflow(suite_request)

            assert result.success is False
            assert "worker died" in result.error
            assert result.steps_completed == ["build_corpus"]

    @pytest.mark.asyncio
    async def test_unknown_suite(self, workflow):
        result = await workflow.execute_workflow(SuiteRequest(suite="nonsense"))

        assert result.success is False
        assert "Unknown suite: nonsense" in result.error
        assert result.steps_completed == []

    @pytest.mark.asyncio
    async def test_oracle_suite_end_to_end(self, workflow, suite_request, temp_dir):
        request = SuiteRequest(
            suite="oracle",
            seed=1,
            limits=suite_request.limits,
            instance_count=10,
            output_dir=temp_dir,
        )

        result = await workflow.execute_workflow(request)

        assert result.success is True
        assert len(result.rows) == 20
        assert result.count("pass") == 20
        assert result.steps_completed == [
            "build_corpus",
            "run_cases",
            "aggregate",
            "write_artifacts",
        ]
        assert result.csv_path.name == "oracle.csv"
        assert len(result.csv_path.read_text().splitlines()) == 21

        summary = json.loads(result.summary_path.read_text())
        assert summary["passed"] is True
        assert summary["counts"]["pass"] == 20
        assert summary["manifest"]["command"] == "verify"
        assert summary["manifest"]["seed"] == 1

    @pytest.mark.asyncio
    async def test_seeded_runs_repeat(self, suite_request):
        first = await VerificationWorkflow().execute_workflow(suite_request)
        second = await VerificationWorkflow().execute_workflow(suite_request)

        assert first.rows == second.rows

    @pytest.mark.asyncio
    async def test_counterexample_formulas(self, workflow):
        result = await workflow.execute_workflow(SuiteRequest(suite="counterexample-formulas"))

        assert result.success is True
        assert result.count("fail") == 0
        assert result.count("pass") > 0
        rows = {row.instance_id: row for row in result.rows}
        assert rows["d2-a2-b2"].values["ell"] == 6
        assert rows["d2-a2-b2"].values["ell_excess"] == 1
        assert rows["d2-a2-b2"].probes["ell_matches_lower_bound"] is False
        assert all(
            row.values["ell_excess"] == 0
            for row in result.rows
            if row.values["delta"] == 1
        )

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_worker_processes_match_sequential(self, suite_request):
        parallel = SuiteRequest(
            suite="oracle",
            seed=1,
            workers=2,
            limits=suite_request.limits,
            instance_count=100,
        )
        sequential = SuiteRequest(
            suite="oracle", seed=1, limits=suite_request.limits, instance_count=100
        )

        first = await VerificationWorkflow().execute_workflow(parallel)
        second = await VerificationWorkflow().execute_workflow(sequential)

        assert first.rows == second.rows

    def test_get_progress(self, workflow):
        progress = workflow.get_progress()

        assert progress["current_step"] == 0
        assert progress["total_steps"] == 4
        assert progress["percentage"] == 0.0
        assert progress["completed_steps"] == []

    @pytest.mark.asyncio
    async def test_progress_after_run(self, workflow, suite_request):
        await workflow.execute_workflow(suite_request)

        progress = workflow.get_progress()

        assert progress["current_step"] == 4
        assert progress["percentage"] == 100.0
        assert progress["completed_steps"][-1] == "✅ No output directory, artifacts skipped"

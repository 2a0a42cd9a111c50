"""Verification suite workflow orchestration."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from ..core.manifest import RunManifest, build_manifest
from .reporting import aggregate_probes, write_suite_artifacts
from .schemas import Case, InstanceRow, SuiteRequest, SuiteResult
from .suites import SUITES, run_case

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 50


class VerificationWorkflow:
    """Orchestrates one verification suite: corpus, checks, aggregation, artifacts."""

    def __init__(self) -> None:
        self._current_step = 0
        self._total_steps = 4
        self._step_results: list[str] = []

    async def execute_workflow(self, request: SuiteRequest) -> SuiteResult:
        """
        Execute a complete verification suite.

        Args:
            request: Suite name, seed, worker count, limits and output location

        Returns:
            Result of the suite execution
        """
        if request.suite not in SUITES:
            return SuiteResult(
                success=False,
                suite=request.suite,
                error=f"Unknown suite: {request.suite} (known: {', '.join(SUITES)})",
            )

        self._current_step = 0
        self._step_results = []
        steps_completed: list[str] = []

        try:
            # Step 1: Build the seeded corpus
            cases = await self._build_corpus(request)
            self._advance(f"✅ Built {len(cases)} cases")
            steps_completed.append("build_corpus")

            # Step 2: Run every case
            rows = await self._run_cases(request, cases)
            self._advance(f"✅ Checked {len(rows)} instances")
            steps_completed.append("run_cases")

            # Step 3: Aggregate probes and statuses
            probes = await self._aggregate(request, rows)
            failed = sum(1 for row in rows if row.failed)
            self._advance(f"{'✅' if not failed else '❌'} {failed} failures")
            steps_completed.append("aggregate")

            result = SuiteResult(
                success=failed == 0,
                suite=request.suite,
                rows=rows,
                steps_completed=steps_completed,
                probes=probes,
            )

            # Step 4: Write CSV and JSON artifacts
            if request.output_dir is not None:
                result = await self._write_artifacts(request, result)
                self._advance(f"✅ Wrote artifacts to {request.output_dir}")
                steps_completed.append("write_artifacts")
            else:
                self._advance("✅ No output directory, artifacts skipped")
            return result

        except Exception as e:
            logger.exception("Suite %s failed", request.suite)
            return SuiteResult(
                success=False,
                suite=request.suite,
                steps_completed=steps_completed,
                error=f"Workflow execution failed: {e}",
            )

    def get_progress(self) -> dict[str, Any]:
        """Get current workflow progress information."""
        return {
            "current_step": self._current_step,
            "total_steps": self._total_steps,
            "percentage": (self._current_step / self._total_steps) * 100,
            "completed_steps": self._step_results.copy(),
        }

    def _advance(self, message: str) -> None:
        self._current_step += 1
        self._step_results.append(message)
        logger.info(message)

    async def _build_corpus(self, request: SuiteRequest) -> list[Case]:
        """Deterministic case list for the requested suite."""
        return SUITES[request.suite].build_cases(request)

    async def _run_cases(self, request: SuiteRequest, cases: list[Case]) -> list[InstanceRow]:
        """Run cases in order, in worker processes when ``workers > 1``."""
        if request.workers > 1 and len(cases) > 1:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=request.workers) as pool:
                futures = [loop.run_in_executor(pool, run_case, case) for case in cases]
                batches = await asyncio.gather(*futures)
        else:
            batches = []
            for index, case in enumerate(cases, start=1):
                batches.append(run_case(case))
                if index % PROGRESS_EVERY == 0:
                    logger.info("%s: %d/%d cases", request.suite, index, len(cases))
                    await asyncio.sleep(0)
        return [row for batch in batches for row in batch]

    async def _aggregate(self, request: SuiteRequest, rows: list[InstanceRow]) -> dict[str, Any]:
        """Probe summaries across all rows."""
        return dict(aggregate_probes(request.suite, rows))

    def _manifest(self, request: SuiteRequest) -> RunManifest:
        limits = request.limits
        partition = request.partition
        return build_manifest(
            "verify",
            {
                "suite": request.suite,
                "workers": request.workers,
                "instance_count": request.instance_count,
                "limits": f"dp={limits.max_dp_vertices},bb={limits.max_bb_vertices},"
                f"budget={limits.node_budget}",
                "C": str(partition.C),
                "parts": partition.parts,
                "max_resample_rounds": partition.max_resample_rounds,
            },
            seed=request.seed,
        )

    async def _write_artifacts(self, request: SuiteRequest, result: SuiteResult) -> SuiteResult:
        """Write the CSV rows and the JSON summary."""
        assert request.output_dir is not None
        csv_path, summary_path = write_suite_artifacts(
            result, self._manifest(request), request.output_dir
        )
        return SuiteResult(
            success=result.success,
            suite=result.suite,
            rows=result.rows,
            steps_completed=result.steps_completed,
            probes=result.probes,
            csv_path=csv_path,
            summary_path=summary_path,
        )

"""Verification suites and their async orchestration."""

from .reporting import render_summary, rows_to_csv, write_suite_artifacts
from .schemas import Case, InstanceRow, PartitionSettings, SuiteRequest, SuiteResult
from .suites import SUITES, Suite, run_case
from .verification import VerificationWorkflow

__all__ = [
    "Case",
    "InstanceRow",
    "PartitionSettings",
    "SUITES",
    "Suite",
    "SuiteRequest",
    "SuiteResult",
    "VerificationWorkflow",
    "render_summary",
    "rows_to_csv",
    "run_case",
    "write_suite_artifacts",
]

"""Schemas for verification suite requests, cases and results."""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..solvers.limits import SolverLimits


@dataclass(frozen=True)
class PartitionSettings:
    """Parameters of the partition and stitch suites."""

    C: Fraction = Fraction(2)
    degrees: tuple[int, ...] = (64, 128)
    size_factors: tuple[int, ...] = (4, 8)
    parts: int = 2
    max_resample_rounds: int = 1_000_000


@dataclass(frozen=True)
class SuiteRequest:
    """Request for one verification suite run."""

    suite: str
    seed: int = 0
    workers: int = 1
    limits: SolverLimits = field(default_factory=SolverLimits)
    partition: PartitionSettings = field(default_factory=PartitionSettings)
    output_dir: Path | None = None
    instance_count: int | None = None


@dataclass(frozen=True)
class Case:
    """One unit of suite work; picklable so it can run in a worker process."""

    suite: str
    case_id: str
    params: dict[str, Any]
    limits: SolverLimits
    partition: PartitionSettings


@dataclass(frozen=True)
class InstanceRow:
    """Per-instance outcome: ``status`` is pass, fail, skipped or not-applicable."""

    instance_id: str
    status: str
    values: dict[str, Any] = field(default_factory=dict)
    probes: dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


@dataclass(frozen=True)
class SuiteResult:
    """Result of a verification suite execution."""

    success: bool
    suite: str
    rows: list[InstanceRow] | None = None
    steps_completed: list[str] | None = None
    probes: dict[str, Any] | None = None
    csv_path: Path | None = None
    summary_path: Path | None = None
    error: str | None = None

    def __post_init__(self) -> None:
        """Initialize mutable defaults."""
        if self.rows is None:
            object.__setattr__(self, "rows", [])
        if self.steps_completed is None:
            object.__setattr__(self, "steps_completed", [])
        if self.probes is None:
            object.__setattr__(self, "probes", {})

    def count(self, status: str) -> int:
        return sum(1 for row in self.rows or [] if row.status == status)

    @property
    def failures(self) -> list[InstanceRow]:
        return [row for row in self.rows or [] if row.failed]

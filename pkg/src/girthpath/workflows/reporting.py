"""CSV rows, JSON summaries and text summaries for verification suites."""

import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

from ..core.file_reader import write_file
from ..core.manifest import RunManifest
from ..core.serialization import dumps
from ..core.types import JSONDict
from .schemas import InstanceRow, SuiteResult
from .suites import SUITES

# Set up Jinja2 environment
template_dir = Path(__file__).parent.parent / "templates"
env = Environment(loader=FileSystemLoader(template_dir), keep_trailing_newline=True)

STATUSES = ("pass", "fail", "skipped", "not-applicable")
MAX_LISTED_FAILURES = 20


def csv_header(suite: str) -> list[str]:
    """Fixed column order of a suite's CSV."""
    definition = SUITES[suite]
    return ["instance_id", "status", *definition.columns, *definition.probe_columns, "message"]


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else round(float(value), 6)
    if isinstance(value, float):
        return round(value, 6)
    return value


def rows_to_csv(suite: str, rows: list[InstanceRow]) -> str:
    """One CSV line per instance under the suite's fixed header."""
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=csv_header(suite), extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        record = {"instance_id": row.instance_id, "status": row.status, "message": row.message}
        record.update({key: _cell(value) for key, value in row.values.items()})
        record.update({key: _cell(value) for key, value in row.probes.items()})
        writer.writerow(record)
    return buffer.getvalue()


def aggregate_probes(suite: str, rows: list[InstanceRow]) -> dict[str, JSONDict]:
    """True-counts of boolean probes and ranges of numeric ones."""
    summary: dict[str, JSONDict] = {}
    for name in SUITES[suite].probe_columns:
        values = [row.probes.get(name) for row in rows]
        present = [value for value in values if value is not None]
        if not present:
            continue
        if all(isinstance(value, bool) for value in present):
            summary[name] = {"true": sum(1 for value in present if value), "total": len(present)}
        else:
            numbers = [float(value) for value in present]
            summary[name] = {
                "min": round(min(numbers), 6),
                "max": round(max(numbers), 6),
                "total": len(numbers),
            }
    return summary


def status_counts(rows: list[InstanceRow]) -> dict[str, int]:
    counts = dict.fromkeys(STATUSES, 0)
    for row in rows:
        counts[row.status] = counts.get(row.status, 0) + 1
    return counts


def summary_document(result: SuiteResult, manifest: RunManifest) -> JSONDict:
    """JSON summary of a suite run with its manifest embedded."""
    rows = result.rows or []
    return {
        "manifest": manifest.to_dict(),
        "suite": result.suite,
        "passed": result.success,
        "counts": status_counts(rows),
        "probes": result.probes,
        "failures": [
            {"instance_id": row.instance_id, "message": row.message} for row in result.failures
        ],
        "csv": str(result.csv_path) if result.csv_path else None,
    }


def render_summary(result: SuiteResult) -> str:
    """Human-readable suite summary."""
    rows = result.rows or []
    failures = result.failures
    template = env.get_template("suite_summary.txt.j2")
    return template.render(
        suite=result.suite,
        description=SUITES[result.suite].description if result.suite in SUITES else "",
        success=result.success,
        total=len(rows),
        counts=status_counts(rows),
        probes=result.probes or {},
        failures=failures[:MAX_LISTED_FAILURES],
        more_failures=max(len(failures) - MAX_LISTED_FAILURES, 0),
        csv_path=result.csv_path,
    )


def write_suite_artifacts(
    result: SuiteResult, manifest: RunManifest, output_dir: Path
) -> tuple[Path, Path]:
    """Write ``<suite>.csv`` and ``<suite>.json`` into ``output_dir``."""
    csv_path = write_file(output_dir / f"{result.suite}.csv", rows_to_csv(result.suite, result.rows or []))
    summary = summary_document(result, manifest)
    summary["csv"] = str(csv_path)
    summary_path = write_file(output_dir / f"{result.suite}.json", dumps(summary))
    return csv_path, summary_path

"""Tests for suite CSV rows, probe aggregation and summaries."""

import json
from fractions import Fraction

from girthpath.core.manifest import build_manifest
from girthpath.workflows import (
    InstanceRow,
    SuiteResult,
    render_summary,
    rows_to_csv,
    write_suite_artifacts,
)
from girthpath.workflows.reporting import aggregate_probes, csv_header, status_counts


def closure_rows():
    return [
        InstanceRow(
            "n3-0",
            "pass",
            {"mode": "exhaustive", "n": 3, "m": 3, "girth": 3, "ell": 2},
            {"closure_strict": False},
        ),
        InstanceRow(
            "n3-1",
            "pass",
            {"mode": "exhaustive", "n": 3, "m": 4, "girth": 2, "ell": 2},
            {"closure_strict": True},
        ),
        InstanceRow("n3-2", "skipped", message="InstanceTooLargeError: too big"),
    ]


class TestCsv:
    """Test the fixed-header CSV encoding."""

    def test_header(self):
        assert csv_header("closure") == [
            "instance_id",
            "status",
            "mode",
            "n",
            "m",
            "girth",
            "ell",
            "closure_strict",
            "message",
        ]

    def test_rows(self):
        lines = rows_to_csv("closure", closure_rows()).splitlines()

        assert lines[0] == "instance_id,status,mode,n,m,girth,ell,closure_strict,message"
        assert lines[1] == "n3-0,pass,exhaustive,3,3,3,2,false,"
        assert lines[2] == "n3-1,pass,exhaustive,3,4,2,2,true,"
        assert lines[3] == "n3-2,skipped,,,,,,,InstanceTooLargeError: too big"

    def test_cells(self):
        row = InstanceRow(
            "p-0",
            "pass",
            {"n": 256, "C": Fraction(2), "c_prime": Fraction(1, 3), "inequality_value": None},
        )

        line = rows_to_csv("partition", [row]).splitlines()[1].split(",")
        header = csv_header("partition")

        assert line[header.index("C")] == "2"
        assert line[header.index("c_prime")] == "0.333333"
        assert line[header.index("inequality_value")] == ""


class TestAggregation:
    """Test probe summaries and status counts."""

    def test_boolean_probes(self):
        assert aggregate_probes("closure", closure_rows()) == {
            "closure_strict": {"true": 1, "total": 2}
        }

    def test_numeric_probes(self):
        rows = [
            InstanceRow("a", "pass", probes={"ratio_g_delta": 0.5}),
            InstanceRow("b", "pass", probes={"ratio_g_delta": Fraction(3, 2)}),
        ]

        assert aggregate_probes("oriented-bound", rows)["ratio_g_delta"] == {
            "min": 0.5,
            "max": 1.5,
            "total": 2,
        }

    def test_status_counts(self):
        assert status_counts(closure_rows()) == {
            "pass": 2,
            "fail": 0,
            "skipped": 1,
            "not-applicable": 0,
        }


class TestSummary:
    """Test text and JSON summaries."""

    def test_render_passed(self):
        result = SuiteResult(success=True, suite="closure", rows=closure_rows()[:2])

        text = render_summary(result)

        assert text.startswith("Suite closure: PASSED\n")
        assert "instances: 2 (pass 2, fail 0, skipped 0, not applicable 0)" in text
        assert "failures:" not in text

    def test_render_failures(self):
        rows = [InstanceRow("x", "fail", message="ell below bound"), InstanceRow("y", "fail")]
        result = SuiteResult(
            success=False,
            suite="closure",
            rows=rows,
            probes={"closure_strict": {"true": 0, "total": 2}},
        )

        text = render_summary(result)

        assert text.startswith("Suite closure: FAILED")
        assert "closure_strict: 0/2" in text
        assert "x: ell below bound" in text
        assert "y: check failed" in text

    def test_write_artifacts(self, temp_dir):
        result = SuiteResult(
            success=True,
            suite="closure",
            rows=closure_rows(),
            probes={"closure_strict": {"true": 1, "total": 2}},
        )
        manifest = build_manifest("verify", {"suite": "closure"}, seed=0)

        csv_path, summary_path = write_suite_artifacts(result, manifest, temp_dir / "out")

        assert csv_path.read_text() == rows_to_csv("closure", closure_rows())
        summary = json.loads(summary_path.read_text())
        assert summary["suite"] == "closure"
        assert summary["csv"] == str(csv_path)
        assert summary["counts"]["skipped"] == 1
        assert summary["failures"] == []
        assert summary["manifest"]["parameters"] == {"suite": "closure"}

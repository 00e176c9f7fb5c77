"""
Tests for the formatting module.
"""

import json

from pretzelsmith.core.census import CensusEntry
from pretzelsmith.core.diagram import PretzelDiagram, params
from pretzelsmith.core.spanlaw import SpanVerdict
from pretzelsmith.tables.matcher import ClassificationReport, Verdict
from pretzelsmith.utils.formatting import (
    render_census_json,
    render_census_text,
    render_params,
    render_reports_json,
    render_reports_text,
)


def _entry(entries, case, knot=True):
    return CensusEntry(PretzelDiagram(entries), SpanVerdict(10, case), knot)


class TestCensusRendering:
    """Test census output."""

    def test_text_rows_and_footer(self):
        """Test aligned rows followed by the per-case summary."""
        text = render_census_text(
            [_entry((9, 0), "1"), _entry((3, 3, 3, 0), "1"), _entry((5, 3, 1), "2", False)], 10
        )

        assert text.splitlines() == [
            "(9,0)      S=10  case=1  knot",
            "(3,3,3,0)  S=10  case=1  knot",
            "(5,3,1)    S=10  case=2  link",
            "# S=10: 3 diagrams; case 1: 2, case 2: 1",
        ]

    def test_empty_census(self):
        """Test that an empty census prints only the footer."""
        assert render_census_text([], 0) == "# S=0: 0 diagrams"

    def test_json(self):
        """Test the JSON array form."""
        data = json.loads(render_census_json([_entry((9, 0), "1")]))

        assert data == [{"diagram": [9, 0], "S": 10, "case": "1", "knot": True}]


class TestReportRendering:
    """Test classification report output."""

    def test_text(self):
        """Test header, candidate list and the empty-candidate dash."""
        reports = [
            ClassificationReport(
                "8_21", 7, (PretzelDiagram((3, 3, -1, -2)),), Verdict.CANDIDATES
            ),
            ClassificationReport("8_12", 9, (), Verdict.NOT_PRETZEL),
        ]

        lines = render_reports_text(reports).splitlines()

        assert lines[0].split() == ["name", "span_V", "verdict", "candidates", "(up", "to", "mirror)"]
        assert lines[1].split() == ["8_21", "7", "CANDIDATES", "(3,3,-1,-2)"]
        assert lines[2].split() == ["8_12", "9", "NOT_PRETZEL", "-"]
        assert all(line == line.rstrip() for line in lines)

    def test_json(self):
        """Test the JSON array form."""
        report = ClassificationReport("8_12", 9, (), Verdict.NOT_PRETZEL)

        assert json.loads(render_reports_json([report])) == [
            {"name": "8_12", "span_V": 9, "verdict": "NOT_PRETZEL", "candidates": []}
        ]


class TestParamsRendering:
    """Test the reduce output."""

    def test_two_lines(self):
        """Test the diagram line and the parameter line."""
        diagram = PretzelDiagram((2, -3, -4))

        assert render_params(diagram, params(diagram)) == (
            "(2,-3,-4)\nr=1 s=2 z=0 alpha=0 beta=0 lambda=0 Sigma=9 M=2"
        )

    def test_missing_minimum_prints_dash(self):
        """Test that M prints as - when there are no big entries."""
        diagram = PretzelDiagram((1, 1, 1))

        assert render_params(diagram, params(diagram)).endswith("Sigma=0 M=-")

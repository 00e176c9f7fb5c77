"""
Tests for the matcher module.
"""

import pytest

from pretzelsmith.core import census
from pretzelsmith.core.diagram import PretzelDiagram
from pretzelsmith.core.laurent import LaurentPoly, mirror
from pretzelsmith.core.planar import jones1
from pretzelsmith.tables.matcher import ClassificationReport, Verdict, audit, classify
from pretzelsmith.tables.table_loader import (
    FIXTURE_8_21_PATH,
    KnotRecord,
    KnownKnot,
    load_known_pretzels,
    load_table,
    save_table,
)

# Jones polynomial of 8_12
V1_8_12 = LaurentPoly([1, -2, 4, -5, 5, -5, 4, -2, 1], min_deg=-4, variable="t")


@pytest.fixture
def record_8_21():
    """The bundled 8_21 record."""
    return load_table(FIXTURE_8_21_PATH)[0]


class TestClassify:
    """Test matching records against censuses."""

    def test_8_21_has_its_pretzel_candidate(self, record_8_21):
        """Test that P(3,3,-1,-2) matches 8_21."""
        [report] = classify([record_8_21])

        assert report.name == "8_21"
        assert report.span_V == 7
        assert report.verdict is Verdict.CANDIDATES
        assert PretzelDiagram((3, 3, -1, -2)) in report.candidates

    def test_mirror_record_matches_too(self, record_8_21):
        """Test that matching is up to t -> 1/t."""
        flipped = KnotRecord("8_21*", 8, False, mirror(record_8_21.v1))

        [report] = classify([flipped])

        assert PretzelDiagram((3, 3, -1, -2)) in report.candidates

    def test_candidates_are_sorted_and_canonical(self, record_8_21):
        """Test candidate order."""
        [report] = classify([record_8_21])

        assert list(report.candidates) == sorted(report.candidates)

    def test_empty_census_gives_not_pretzel(self, record_8_21):
        """Test the verdict when nothing matches."""
        [report] = classify([record_8_21], census_for=lambda S: [])

        assert report.verdict is Verdict.NOT_PRETZEL
        assert report.candidates == ()

    def test_census_is_computed_once_per_span(self, record_8_21):
        """Test that records sharing a span share a census."""
        calls = []

        def provider(S):
            calls.append(S)
            return census.enumerate(S, knots_only=True)

        twin = KnotRecord("8_21b", 8, False, record_8_21.v1)
        classify([record_8_21, twin], census_for=provider)

        assert calls == [7]

    def test_span_filter(self, record_8_21):
        """Test that the span filter skips other records."""
        assert classify([record_8_21], census_for=lambda S: [], span=10) == []
        assert len(classify([record_8_21], census_for=lambda S: [], span=7)) == 1

    @pytest.mark.slow
    def test_8_12_is_not_pretzel(self, tmp_path):
        """Test that 8_12 has no pretzel candidate."""
        path = tmp_path / "table.jsonl"
        save_table([KnotRecord("8_12", 8, True, V1_8_12)], path)

        [report] = classify(load_table(path))

        assert report.span_V == 9
        assert report.verdict is Verdict.NOT_PRETZEL

    @pytest.mark.slow
    def test_9_35_candidates_include_333(self):
        """Test that the span-10 census finds P(3,3,3) for 9_35."""
        record = KnotRecord("9_35", 9, True, jones1((3, 3, 3)))

        [report] = classify([record])

        assert report.span_V == 10
        assert PretzelDiagram((3, 3, 3)) in report.candidates

    def test_to_dict(self):
        """Test the JSON form of a report."""
        report = ClassificationReport(
            "8_21", 7, (PretzelDiagram((3, 3, -1, -2)),), Verdict.CANDIDATES
        )

        assert report.to_dict() == {
            "name": "8_21",
            "span_V": 7,
            "verdict": "CANDIDATES",
            "candidates": [[3, 3, -1, -2]],
        }


class TestAudit:
    """Test the audit against known pretzel status."""

    @pytest.fixture
    def known(self):
        """Two knots, one pretzel and one not."""
        return [
            KnownKnot("8_21", 8, False, PretzelDiagram((-3, -3, 1, 2))),
            KnownKnot("8_12", 8, True, None),
        ]

    def test_agreement(self, known):
        """Test that matching reports give no discrepancies."""
        reports = [
            ClassificationReport(
                "8_21", 7, (PretzelDiagram((3, 3, -1, -2)),), Verdict.CANDIDATES
            ),
            ClassificationReport("8_12", 9, (), Verdict.NOT_PRETZEL),
            ClassificationReport("unknown", 5, (), Verdict.NOT_PRETZEL),
        ]

        assert audit(reports, known) == []

    def test_missing_candidate(self, known):
        """Test a pretzel knot whose diagram is missing."""
        reports = [ClassificationReport("8_21", 7, (), Verdict.NOT_PRETZEL)]

        assert audit(reports, known) == ["8_21: (3,3,-1,-2) missing from candidates"]

    def test_non_pretzel_with_candidates(self, known):
        """Test a non-pretzel knot that got candidates."""
        reports = [
            ClassificationReport("8_12", 9, (PretzelDiagram((5, 3, 1)),), Verdict.CANDIDATES)
        ]

        assert audit(reports, known) == ["8_12: not pretzel but has 1 candidate(s)"]

    def test_fixture_report_passes_audit(self, record_8_21):
        """Test the bundled record end to end against the bundled list."""
        assert audit(classify([record_8_21]), load_known_pretzels()) == []

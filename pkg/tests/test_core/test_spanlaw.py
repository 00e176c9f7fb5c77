"""
Tests for the spanlaw module.

Point values come from the classification of spans; the sweeps compare the
case law with the span of the bracket.
"""

import itertools

import pytest

from pretzelsmith.core.diagram import is_reduced, mirror, sort_desc
from pretzelsmith.core.planar import jones_span
from pretzelsmith.core.spanlaw import (
    SpanDisagreementError,
    SpanVerdict,
    case_sort_key,
    check_bounds,
    is_census_excluded,
    is_torus_like,
    lower_bound,
    proposition_bounds,
    span_checked,
    span_formula,
    span_via_rewrite,
    torus_span,
)
from pretzelsmith.core.validator import NotReducedError, NotSortedError


def _sorted_reduced(max_len, max_entry):
    values = range(max_entry, -max_entry - 1, -1)
    for n in range(1, max_len + 1):
        for entries in itertools.combinations_with_replacement(values, n):
            if is_reduced(entries):
                yield entries


class TestSpanVerdict:
    """Test the verdict value class."""

    def test_str(self):
        """Test the printed form."""
        assert str(SpanVerdict(3, "5.3-exception")) == "S=3 case=5.3-exception"
        assert str(SpanVerdict(6, "5.2", True)) == "S=6 case=5.2 (mirrored)"

    def test_to_dict(self):
        """Test the JSON form."""
        assert SpanVerdict(2, "2-exception").to_dict() == {
            "S": 2,
            "case": "2-exception",
            "mirrored": False,
        }


class TestPointValues:
    """Test spans attested for specific diagrams."""

    def test_item_5_3_exception(self):
        """Test P(2,-3,-4)."""
        verdict = span_formula((2, -3, -4))

        assert verdict.S == 3
        assert verdict.case_label == "5.3-exception"

    @pytest.mark.parametrize("a4", [-7, -8, -9, -10])
    def test_item_5_4_exception(self, a4):
        """Test P(2,-3,-4,a4) = Sigma - 6."""
        verdict = span_formula((2, -3, -4, a4))

        assert verdict.S == 2 + 3 + 4 - a4 - 6
        assert verdict.case_label == "5.4-exception"

    def test_worked_example(self):
        """Test P(2,-3,-4,-7) has span 10."""
        assert span_formula((2, -3, -4, -7)).S == 10

    def test_split_unlink(self):
        """Test P(1,-1)."""
        assert str(span_formula((1, -1))) == "S=2 case=2-exception"

    @pytest.mark.parametrize("a5,expected", [(-7, 10), (-8, 11)])
    def test_item_7_14_exception(self, a5, expected):
        """Test P(1,-2,-3,-4,a5) = Sigma - 6."""
        verdict = span_formula((1, -2, -3, -4, a5))

        assert verdict.S == expected
        assert verdict.case_label == "7.14-exception"

    def test_lower_bound_is_sharp(self):
        """Test lower_bound(P(2,-3,-4)) = 9 - 2 - 4 = S."""
        assert lower_bound((2, -3, -4)) == 3 == span_formula((2, -3, -4)).S

    @pytest.mark.parametrize(
        "entries,S,label,mirrored",
        [
            ((3, 3, 3, 0), 10, "1", False),
            ((3, 3, 3), 10, "2", False),
            ((11, 2, -1), 10, "3.4", False),
            ((3, 2, -1), 1, "3.3", False),
            ((3, 3, -1, -2), 7, "3.1", False),
            ((3, 2, -1, -3), 7, "3.1", False),
            ((3, 3, -2), 6, "5.2", True),
            ((3, 3, -3), 7, "5.1", True),
            ((3, 3, 3, -1, -1), 8, "3.1", False),
            ((3, -3, -6), 10, "5.1", False),
            ((1, -3, -9), 10, "6.3", False),
            ((3,), 1, "4.1", False),
        ],
    )
    def test_labels(self, entries, S, label, mirrored):
        """Test span and case label of assorted diagrams."""
        verdict = span_formula(entries)

        assert (verdict.S, verdict.case_label, verdict.mirrored) == (S, label, mirrored)

    def test_unsorted_raises(self):
        """Test that unsorted input is refused."""
        with pytest.raises(NotSortedError, match="not sorted"):
            span_formula((-3, 2))

    def test_unreduced_raises(self):
        """Test that unreduced input is refused."""
        with pytest.raises(NotReducedError, match="not reduced"):
            span_formula((3, 1, -1))


class TestRewrite:
    """Test the P(1,-2,...) rewrite path."""

    @pytest.mark.parametrize(
        "entries",
        [(1, -2, -3, -4, -7), (1, -2, -3, -3), (1, -2, -2, -5), (1, -2, -5, -6), (1, -2, -3, -4, -4)],
    )
    def test_rewrite_agrees_with_item_7(self, entries):
        """Test that item 7 matches the rewritten diagram's span."""
        assert span_via_rewrite(entries).S == span_formula(entries).S

    def test_rewrite_without_pair(self):
        """Test that diagrams without (1,-2) give None."""
        assert span_via_rewrite((3, 3)) is None


class TestBounds:
    """Test the span bounds and the lower bound."""

    def test_bounds_for_ten(self):
        """Test integer bounds at S = 10."""
        bounds = proposition_bounds(10)

        assert bounds.z_max == 10
        assert bounds.rs_max == 8
        assert bounds.lambda_max == 9
        assert bounds.entry_max == 14
        assert bounds.n_max == 27
        assert bounds.sigma_max == 28

    def test_negative_span_raises(self):
        """Test that spans are non-negative."""
        with pytest.raises(ValueError, match="non-negative"):
            proposition_bounds(-1)

    def test_check_bounds(self):
        """Test a diagram inside and one outside the bounds."""
        assert check_bounds(3, (2, -3, -4))
        assert not check_bounds(3, (9, 0))

    def test_lower_bound_without_big_entries(self):
        """Test the convention Sigma = M = 0."""
        assert lower_bound((1, 1, 1)) == -4

    def test_torus_span(self):
        """Test spans of T(2,q)."""
        assert torus_span(0) == 2
        assert torus_span(-1) == 1
        assert torus_span(5) == 6

    def test_torus_like(self):
        """Test that two-column diagrams and torus labels are flagged."""
        assert is_torus_like((6, -8), span_formula((6, -8)))
        assert not is_torus_like((2, -3, -4), span_formula((2, -3, -4)))

    def test_two_column_diagrams_follow_torus_span(self):
        """Test that every reduced P(a1,a2) has the span of T(2, a1 + a2)."""
        for entries in _sorted_reduced(2, 7):
            if len(entries) != 2:
                continue
            verdict = span_formula(entries)

            assert verdict.S == torus_span(sum(entries)), entries
            assert is_torus_like(entries, verdict)

    @pytest.mark.parametrize("a3", range(-2, -10, -1))
    def test_one_minus_two_triples_follow_torus_span(self, a3):
        """Test that P(1,-2,a3) has the span of T(2, 2 + a3)."""
        verdict = span_formula((1, -2, a3))

        assert verdict.S == torus_span(2 + a3) == jones_span((1, -2, a3))
        assert verdict.case_label in {"7.2", "7.3", "7.4"}
        assert is_torus_like((1, -2, a3), verdict)


class TestLabels:
    """Test label ordering and exclusion."""

    def test_sort_key(self):
        """Test numeric ordering with exception suffixes."""
        labels = ["7.10", "5.3-exception", "7.2", "5.3", "1", "2-exception", "2"]

        assert sorted(labels, key=case_sort_key) == [
            "1",
            "2",
            "2-exception",
            "5.3",
            "5.3-exception",
            "7.2",
            "7.10",
        ]

    @pytest.mark.parametrize(
        "label,excluded",
        [("1", False), ("3.2", True), ("3.4", False), ("4.4", True), ("6.3", False), ("7.9", True)],
    )
    def test_census_exclusion(self, label, excluded):
        """Test which labels a census leaves out."""
        assert is_census_excluded(label) is excluded


class TestAgainstBracket:
    """Compare the case law with the bracket span."""

    def test_span_checked(self):
        """Test the checked verdict on an exceptional diagram."""
        assert str(span_checked((2, -3, -4))) == "S=3 case=5.3-exception"

    def test_disagreement_is_reported(self, monkeypatch):
        """Test that a bracket span differing from the case law raises."""
        monkeypatch.setattr("pretzelsmith.core.spanlaw.jones_span", lambda p: 99)

        with pytest.raises(SpanDisagreementError, match="bracket gives S=99"):
            span_checked((2, -3, -4))

    def test_small_sweep(self):
        """Test every sorted reduced diagram with n <= 4, |a| <= 5."""
        for entries in _sorted_reduced(4, 5):
            assert span_formula(entries).S == jones_span(entries), entries

    @pytest.mark.slow
    def test_full_sweep(self):
        """Test every sorted reduced diagram with n <= 6, |a| <= 7."""
        for entries in _sorted_reduced(6, 7):
            assert span_formula(entries).S == jones_span(entries), entries

    def test_mirror_keeps_span(self):
        """Test S(mirror P) = S(P) for every sorted reduced diagram with n <= 5, |a| <= 3."""
        for entries in _sorted_reduced(5, 3):
            reflected = sort_desc(mirror(entries))

            assert span_formula(reflected).S == span_formula(entries).S, entries

    def test_sorting_does_not_matter(self):
        """Test that the bracket span ignores column order."""
        for entries in [(2, -3, -4), (3, 3, -1, -2), (5, 0, -2)]:
            assert jones_span(entries) == jones_span(sort_desc(entries)[::-1])

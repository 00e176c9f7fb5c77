"""
Tests for the diagram module.
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretzelsmith.core.diagram import (
    PretzelDiagram,
    absorb_one_minus_two,
    canonical,
    count_even,
    format_entries,
    is_knot,
    is_reduced,
    mirror,
    params,
    reduce,
    sort_desc,
)
from pretzelsmith.core.validator import InvalidDiagramError


class TestPretzelDiagram:
    """Test the diagram value class."""

    def test_entries_and_crossings(self):
        """Test entries and crossing count."""
        p = PretzelDiagram([2, -3, -4])

        assert p.entries == (2, -3, -4)
        assert p.crossing_count == 9
        assert len(p) == 3
        assert list(p) == [2, -3, -4]
        assert p[1] == -3

    def test_string_forms(self):
        """Test str and repr."""
        p = PretzelDiagram((3, 0))

        assert str(p) == "(3,0)"
        assert repr(p) == "PretzelDiagram((3, 0))"

    def test_equality_with_tuple(self):
        """Test that diagrams compare equal to their entry tuples."""
        assert PretzelDiagram([1, 1, 1]) == (1, 1, 1)
        assert PretzelDiagram([1, 1, 1]) != (1, 1)

    def test_hash_and_order(self):
        """Test hashing and lexicographic order."""
        a, b = PretzelDiagram([3, 0]), PretzelDiagram([2, 5])

        assert len({a, PretzelDiagram((3, 0))}) == 1
        assert sorted([a, b]) == [b, a]

    def test_empty_raises(self):
        """Test that a diagram needs a column."""
        with pytest.raises(InvalidDiagramError):
            PretzelDiagram([])

    def test_format_entries(self):
        """Test the printed tuple form."""
        assert format_entries([1, -1]) == "(1,-1)"


class TestParams:
    """Test the counting parameters."""

    def test_mixed_diagram(self):
        """Test every parameter on a diagram with all entry kinds."""
        prm = params((3, 2, 1, 1, 0, -1, -5))

        assert (prm.r, prm.s, prm.z) == (2, 1, 1)
        assert (prm.alpha, prm.beta, prm.lam) == (2, 1, 1)
        assert prm.sigma == 10
        assert prm.M == 2

    def test_no_big_entries(self):
        """Test that M is None without |a| > 1 entries."""
        prm = params((1, 1, 1))

        assert prm.sigma == 0
        assert prm.M is None

    def test_to_dict_uses_printed_names(self):
        """Test the dictionary keys."""
        assert params((2, -3, -4)).to_dict() == {
            "r": 1,
            "s": 2,
            "z": 0,
            "alpha": 0,
            "beta": 0,
            "lambda": 0,
            "Sigma": 9,
            "M": 2,
        }


class TestReduction:
    """Test reduction and the reduced predicate."""

    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((2, -3, -4), True),
            ((1, -1), True),
            ((1, -1, 3), False),
            ((0, 1), False),
            ((0, -3), True),
        ],
    )
    def test_is_reduced(self, entries, expected):
        """Test the reduced predicate, P(1,-1) included."""
        assert is_reduced(entries) is expected

    def test_cancels_pairs(self):
        """Test that (1,-1) pairs cancel and order is kept."""
        assert reduce((1, -1, 5)) == (5,)
        assert reduce((3, 1, -2, -1, 1)) == (3, -2, 1)

    def test_absorbs_units_into_zero(self):
        """Test that +-1 entries vanish next to a 0 column."""
        assert reduce((0, 1, 1, -3)) == (0, -3)

    def test_pairs_then_zero(self):
        """Test that a fully cancelled diagram keeps its 0 column."""
        assert reduce((1, -1, 0)) == (0,)

    def test_split_unlink_is_kept(self):
        """Test that P(1,-1) is already reduced."""
        assert reduce((1, 1, -1, -1)) == (1, -1)

    def test_reduce_is_idempotent(self):
        """Test that reducing twice changes nothing."""
        once = reduce((2, 1, 1, -1, 0, -3))

        assert reduce(once) == once
        assert is_reduced(once)

    @given(
        st.lists(st.sampled_from([-3, -2, -1, 0, 1, 2, 3]), min_size=1, max_size=7),
        st.randoms(use_true_random=False),
    )
    def test_reduction_is_confluent(self, entries, rnd):
        """Test that cancellation order does not change the reduced multiset."""
        shuffled = list(entries)
        rnd.shuffle(shuffled)

        assert sorted(reduce(entries).entries) == sorted(reduce(shuffled).entries)


class TestSymmetries:
    """Test sorting, mirroring and the canonical form."""

    def test_sort_desc(self):
        """Test non-increasing order."""
        assert sort_desc((-3, 2, 0)) == (2, 0, -3)

    def test_mirror(self):
        """Test that mirror negates entries."""
        assert mirror((2, -3)) == (-2, 3)

    def test_canonical_picks_larger_form(self):
        """Test the canonical representative."""
        assert canonical((-3, 0, -3, -3)) == (3, 3, 3, 0)
        assert canonical((-3, -3, 1, 2)) == (3, 3, -1, -2)

    def test_canonical_is_mirror_invariant(self):
        """Test that a diagram and its mirror share a canonical form."""
        p = (2, -3, -4, 1)

        assert canonical(p) == canonical(mirror(p))

    def test_canonical_is_constant_on_orbits(self):
        """Test canonical over every ordering and its mirror, n <= 5, |a| <= 3."""
        for n in range(1, 6):
            for entries in itertools.combinations_with_replacement(range(-3, 4), n):
                expected = canonical(entries)
                for perm in set(itertools.permutations(entries)):
                    assert canonical(perm) == expected, perm
                    assert canonical(mirror(perm)) == expected, perm


class TestKnotRule:
    """Test the parity rule for knots."""

    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((1, 1, 1), True),
            ((3, 3, -1, -2), True),
            ((2, 2), False),
            ((1, 1), False),
            ((3, 0), True),
            ((0, 0), False),
            ((3, 3, 3, 3), False),
        ],
    )
    def test_is_knot(self, entries, expected):
        """Test knot detection from even-entry parity."""
        assert is_knot(entries) is expected

    def test_count_even_counts_zero(self):
        """Test that 0 counts as even."""
        assert count_even((2, 0, 3)) == 2


class TestAbsorbOneMinusTwo:
    """Test the P(1,-2,...) rewrite."""

    def test_rewrites_pair(self):
        """Test that 1 is removed and -2 becomes 2."""
        assert absorb_one_minus_two((1, -2, -3)) == (2, -3)

    def test_no_pair_returns_none(self):
        """Test that diagrams without the pair are left alone."""
        assert absorb_one_minus_two((3, 3)) is None
        assert absorb_one_minus_two((1,)) is None

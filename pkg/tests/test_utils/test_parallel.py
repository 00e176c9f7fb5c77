"""
Tests for the parallel module.
"""

import pytest

from pretzelsmith.utils.parallel import default_jobs, map_batches, strided_batches


class TestStridedBatches:
    """Test batch splitting."""

    def test_interleaves(self):
        """Test that items are dealt round-robin."""
        assert strided_batches([1, 2, 3, 4, 5], 2) == [[1, 3, 5], [2, 4]]

    def test_drops_empty_batches(self):
        """Test that more jobs than items gives one batch per item."""
        assert strided_batches([7, 8], 5) == [[7], [8]]

    def test_empty_input(self):
        """Test that no items give no batches."""
        assert strided_batches([], 3) == []

    def test_non_positive_jobs_raises(self):
        """Test that jobs must be positive."""
        with pytest.raises(ValueError, match="jobs must be positive"):
            strided_batches([1], 0)


class TestMapBatches:
    """Test running batches serially and in processes."""

    def test_serial_single_batch(self):
        """Test that one job runs everything as one batch."""
        assert map_batches(sum, [1, 2, 3, 4, 5], 1) == [15]
        assert map_batches(sum, [1, 2, 3, 4, 5], None) == [15]

    def test_too_few_items_stay_serial(self):
        """Test that a single item is not sent to a pool."""
        assert map_batches(len, [9], 4) == [1]

    def test_process_pool_keeps_batch_order(self):
        """Test results come back in batch order."""
        assert map_batches(sum, [1, 2, 3, 4, 5], 2) == [9, 6]

    def test_default_jobs_is_positive(self):
        """Test the default worker count."""
        assert default_jobs() >= 1

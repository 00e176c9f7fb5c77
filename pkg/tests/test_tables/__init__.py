"""Tests for the knot-table loader and matcher."""

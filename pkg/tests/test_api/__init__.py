"""Tests for the Flask REST API."""

"""Integration tests for PretzelSmith command-line workflows."""

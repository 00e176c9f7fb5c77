"""Shared pytest configuration for the PretzelSmith test suite."""


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "slow: exhaustive sweeps that take more than a few seconds"
    )

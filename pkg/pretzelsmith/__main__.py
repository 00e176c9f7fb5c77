"""
PretzelSmith entry point script.

Run with: python -m pretzelsmith <command> ...

This module configures logging and hands the arguments to the CLI.
"""

import logging
import sys

from pretzelsmith.cli import run

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)


def main() -> int:
    """Run PretzelSmith and return its exit code."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())

"""PretzelSmith - Jones spans and censuses of pretzel links."""

__version__ = "1.0.0"
__author__ = "PretzelSmith Development Team"
__license__ = "MIT"

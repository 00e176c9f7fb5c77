"""
Flask REST API for PretzelSmith.

This package provides HTTP endpoints that wrap the bracket, span, Jones,
census and classification operations.
"""

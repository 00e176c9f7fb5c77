"""
Helper functions for the Flask API.

This module reads diagrams and flags from query strings and builds the
JSON error responses shared by every endpoint.
"""

import logging
from typing import Mapping, Optional, Tuple

from flask import Response, jsonify

from pretzelsmith.core.diagram import PretzelDiagram
from pretzelsmith.core.validator import EntryParseError, parse_entries

logger = logging.getLogger(__name__)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


def diagram_from_args(args: Mapping[str, str]) -> PretzelDiagram:
    """
    Read the ``entries`` query parameter.

    Raises:
        EntryParseError: If the parameter is missing or malformed
    """
    text = args.get("entries")
    if text is None:
        raise EntryParseError("Missing query parameter 'entries'")
    return PretzelDiagram(parse_entries(text))


def parse_flag(value: Optional[str], name: str) -> bool:
    """
    Interpret a boolean query parameter; absent means False.

    Raises:
        EntryParseError: If the value is not a recognised boolean
    """
    if value is None:
        return False
    lowered = value.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise EntryParseError(f"Invalid value for '{name}': '{value}'")


def error_response(error: Exception, status: int) -> Tuple[Response, int]:
    """JSON body ``{"error": message}`` with the given status."""
    if status >= 500:
        return jsonify({"error": "An unexpected error occurred"}), status
    logger.info("Request failed with %d: %s", status, error)
    return jsonify({"error": str(error)}), status

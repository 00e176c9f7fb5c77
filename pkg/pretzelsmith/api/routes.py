"""
REST API routes for PretzelSmith.

This module defines the HTTP endpoints over the core operations. Every
endpoint answers JSON; parse and table errors give 400, span disagreements 409,
other domain errors 422 and unexpected failures 500.
"""

import functools
import logging
from typing import Callable

from flask import Blueprint, jsonify, request

from pretzelsmith import __version__
from pretzelsmith.api.utils import diagram_from_args, error_response, parse_flag
from pretzelsmith.core import census
from pretzelsmith.core.bracket import kb_closed
from pretzelsmith.core.diagram import canonical, params, reduce, sort_desc
from pretzelsmith.core.planar import build, jones, jones1, jones_span, trace
from pretzelsmith.core.spanlaw import SpanDisagreementError, span_checked, span_formula
from pretzelsmith.core.validator import EntryParseError, PretzelSmithError
from pretzelsmith.tables.matcher import classify
from pretzelsmith.tables.table_loader import TableValidationError, parse_table_text

logger = logging.getLogger(__name__)

api_bp = Blueprint("api", __name__)

# spans above this are left to the CLI, which can fan out over processes
MAX_API_CENSUS_SPAN = 12

SPAN_METHODS = ("formula", "bracket", "both")


def _json_errors(view: Callable) -> Callable:
    """Map exceptions raised by a view to JSON error responses."""

    @functools.wraps(view)
    def wrapper(*args, **kwargs):
        try:
            return view(*args, **kwargs)
        except (EntryParseError, TableValidationError) as e:
            return error_response(e, 400)
        except SpanDisagreementError as e:
            return error_response(e, 409)
        except PretzelSmithError as e:
            return error_response(e, 422)
        except Exception as e:  # pylint: disable=broad-except
            logger.exception("Error in %s endpoint: %s", view.__name__, e)
            return error_response(e, 500)

    return wrapper


@api_bp.route("/health", methods=["GET"])
def health() -> tuple:
    """
    Health check endpoint.

    Returns:
        JSON response with status and version
    """
    return jsonify({"status": "ok", "version": __version__}), 200


@api_bp.route("/bracket", methods=["GET"])
@_json_errors
def bracket() -> tuple:
    """
    Kauffman bracket of ``?entries=a1,...,an``.

    Returns:
        {"diagram": [...], "bracket": "..."}
    """
    diagram = diagram_from_args(request.args)
    return jsonify({"diagram": list(diagram.entries), "bracket": str(kb_closed(diagram))}), 200


@api_bp.route("/span", methods=["GET"])
@_json_errors
def span() -> tuple:
    """
    Span of V for the reduced sorted form of ``?entries=``.

    Query parameters:
        - entries: Diagram entries
        - method: formula (default), bracket or both

    Returns:
        (200) {"diagram": [...], "S": ..., "case": ..., "mirrored": ...};
        with method=bracket only "diagram", "S" and "method"
        (409) when method=both and the two spans differ
    """
    method = request.args.get("method", "formula")
    if method not in SPAN_METHODS:
        raise EntryParseError(f"Unknown method '{method}', expected one of {SPAN_METHODS}")
    diagram = sort_desc(reduce(diagram_from_args(request.args)))

    if method == "bracket":
        payload = {"diagram": list(diagram.entries), "S": jones_span(diagram), "method": method}
        return jsonify(payload), 200

    verdict = span_checked(diagram) if method == "both" else span_formula(diagram)
    return jsonify({"diagram": list(diagram.entries), **verdict.to_dict()}), 200


@api_bp.route("/jones", methods=["GET"])
@_json_errors
def jones_polynomial() -> tuple:
    """
    Jones polynomial of ``?entries=``, or V1 with ``v1=true``.

    Returns:
        {"polynomial": "...", "variable": "t" or "A", "writhe": ...,
        "components": ...}
    """
    diagram = diagram_from_args(request.args)
    want_v1 = parse_flag(request.args.get("v1"), "v1")
    traced = trace(build(diagram))
    if want_v1:
        value = jones1(diagram, integral=traced.component_count == 1)
    else:
        value = jones(diagram)
    return (
        jsonify(
            {
                "polynomial": str(value),
                "variable": value.variable,
                "writhe": traced.writhe,
                "components": traced.component_count,
            }
        ),
        200,
    )


@api_bp.route("/reduce", methods=["GET"])
@_json_errors
def reduce_diagram() -> tuple:
    """
    Reduced canonical form of ``?entries=`` and its parameters.

    Returns:
        {"input": [...], "diagram": [...], "params": {...}}
    """
    given = diagram_from_args(request.args)
    diagram = canonical(reduce(given))
    return (
        jsonify(
            {
                "input": list(given.entries),
                "diagram": list(diagram.entries),
                "params": params(diagram).to_dict(),
            }
        ),
        200,
    )


@api_bp.route("/census/<int:S>", methods=["GET"])
@_json_errors
def census_listing(S: int) -> tuple:
    """
    Census of reduced diagrams with span S; ``?knots=true`` for knots only.

    Returns:
        (200) JSON array of {"diagram", "S", "case", "knot"}
        (422) when S exceeds MAX_API_CENSUS_SPAN
    """
    knots_only = parse_flag(request.args.get("knots"), "knots")
    if S > MAX_API_CENSUS_SPAN:
        raise census.CensusTooLargeError(
            f"too large: the API serves censuses up to S={MAX_API_CENSUS_SPAN}, got {S}"
        )
    entries = census.enumerate(S, knots_only=knots_only)
    return jsonify([entry.to_dict() for entry in entries]), 200


@api_bp.route("/classify", methods=["POST"])
@_json_errors
def classify_table() -> tuple:
    """
    Classify a JSON-lines knot table sent as the request body.

    Query parameters:
        - span: (optional) only classify records with this span of V

    Returns:
        JSON array of reports, in body order
    """
    records = parse_table_text(request.get_data(as_text=True), source="request body")
    span_filter = request.args.get("span")
    target = None
    if span_filter is not None:
        try:
            target = int(span_filter)
        except ValueError as e:
            raise EntryParseError(f"Invalid span '{span_filter}'") from e
    reports = classify(records, span=target)
    return jsonify([report.to_dict() for report in reports]), 200

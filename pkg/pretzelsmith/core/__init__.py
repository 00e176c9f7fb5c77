"""
Core engine components for PretzelSmith.

This package holds the exact Laurent arithmetic, the pretzel diagram model,
the Kauffman bracket evaluators, the planar tracer, the span law and the
census enumerator, independent of the CLI and the HTTP API.
"""

from pretzelsmith.core.validator import (
    PretzelSmithError,
    EntryParseError,
    InvalidDiagramError,
    NotReducedError,
    NotSortedError,
    parse_entries,
    validate_entries,
)
from pretzelsmith.core.laurent import (
    LaurentPoly,
    delta,
    divide_exact,
    mirror as mirror_poly,
    span,
    to_t_poly,
)
from pretzelsmith.core.diagram import (
    PretzelDiagram,
    DiagramParams,
    canonical,
    is_knot,
    is_reduced,
    params,
    reduce,
    sort_desc,
)
from pretzelsmith.core.bracket import kb_closed, kb_recursive, qbracket
from pretzelsmith.core.planar import (
    build,
    component_count,
    jones,
    jones1,
    jones_span,
    state_sum,
    trace,
)
from pretzelsmith.core.spanlaw import (
    SpanVerdict,
    check_bounds,
    lower_bound,
    span_formula,
)
from pretzelsmith.core.census import CensusEntry, brute_census

__all__ = [
    "PretzelSmithError",
    "EntryParseError",
    "InvalidDiagramError",
    "NotReducedError",
    "NotSortedError",
    "parse_entries",
    "validate_entries",
    "LaurentPoly",
    "delta",
    "divide_exact",
    "mirror_poly",
    "span",
    "to_t_poly",
    "PretzelDiagram",
    "DiagramParams",
    "canonical",
    "is_knot",
    "is_reduced",
    "params",
    "reduce",
    "sort_desc",
    "kb_closed",
    "kb_recursive",
    "qbracket",
    "build",
    "component_count",
    "jones",
    "jones1",
    "jones_span",
    "state_sum",
    "trace",
    "SpanVerdict",
    "check_bounds",
    "lower_bound",
    "span_formula",
    "CensusEntry",
    "brute_census",
]

"""
Knot tables for PretzelSmith.

This package holds the JSON-lines knot-table loader, the matcher that
compares table polynomials with pretzel censuses, and the bundled data
files (the 8_21 fixture, the printed span-10 list and the known pretzel
status of knots up to nine crossings).
"""

from pretzelsmith.tables.table_loader import (
    KnotRecord,
    KnownKnot,
    load_table,
    parse_table_text,
    save_table,
    validate_table_file,
    load_known_pretzels,
    span_v,
    TableValidationError,
    DuplicateRecordError,
)
from pretzelsmith.tables.matcher import (
    ClassificationReport,
    Verdict,
    classify,
    audit,
)

__all__ = [
    "KnotRecord",
    "KnownKnot",
    "load_table",
    "parse_table_text",
    "save_table",
    "validate_table_file",
    "load_known_pretzels",
    "span_v",
    "TableValidationError",
    "DuplicateRecordError",
    "ClassificationReport",
    "Verdict",
    "classify",
    "audit",
]

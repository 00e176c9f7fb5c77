"""
Knot-table loader for Jones polynomial records.

Tables are JSON-lines files, one knot per line:

    {"name":"8_21","crossings":8,"alternating":false,
     "v1":{"min_deg":1,"coeffs":[2,-2,3,-3,2,-2,1]}}

``coeffs`` run upward from ``min_deg`` and hold integers only. This module
parses and validates such files, writes them back, and reads the bundled
list of knots whose pretzel status is known.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from pretzelsmith.core.diagram import PretzelDiagram
from pretzelsmith.core.laurent import JONES_VARIABLE, LaurentPoly, span
from pretzelsmith.core.validator import PretzelSmithError

logger = logging.getLogger(__name__)

TABLES_DIR = Path(__file__).parent
FIXTURE_8_21_PATH = TABLES_DIR / "knot_8_21.jsonl"
KNOWN_PRETZELS_PATH = TABLES_DIR / "known_pretzels.json"

PathLike = Union[str, Path]


class TableValidationError(PretzelSmithError):
    """Raised when a knot-table file is invalid or malformed."""


class DuplicateRecordError(TableValidationError):
    """Raised when a knot name appears twice in one table."""


@dataclass(frozen=True)
class KnotRecord:
    """
    One knot-table entry.

    Attributes:
        name: Knot name such as "8_21"
        crossings: Crossing number
        alternating: Whether the knot is alternating
        v1: Unknot-normalized Jones polynomial in t
    """

    name: str
    crossings: int
    alternating: bool
    v1: LaurentPoly

    def to_dict(self) -> Dict[str, Any]:
        """Record in the JSON-lines schema."""
        return {
            "name": self.name,
            "crossings": self.crossings,
            "alternating": self.alternating,
            "v1": self.v1.to_dict(),
        }


@dataclass(frozen=True)
class KnownKnot:
    """
    Pretzel status of a tabulated knot.

    Attributes:
        name: Knot name
        crossings: Crossing number
        alternating: Whether the knot is alternating
        diagram: A pretzel diagram of the knot, or None if it is not pretzel
    """

    name: str
    crossings: int
    alternating: bool
    diagram: Optional[PretzelDiagram]

    @property
    def is_pretzel(self) -> bool:
        """True when a pretzel diagram is known."""
        return self.diagram is not None


def span_v(record: KnotRecord) -> int:
    """Span of V, one more than the span of V1."""
    return span(record.v1) + 1


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_record(data: Any, where: str = "record") -> KnotRecord:
    """
    Validate one decoded JSON object and build a KnotRecord.

    Args:
        data: Decoded JSON value
        where: Location used in error messages, e.g. "line 3"

    Raises:
        TableValidationError: If a field is missing or has the wrong type
    """
    if not isinstance(data, dict):
        raise TableValidationError(
            f"{where}: expected a JSON object, got {type(data).__name__}"
        )
    for field in ("name", "crossings", "alternating", "v1"):
        if field not in data:
            raise TableValidationError(f"{where}: missing required field '{field}'")

    name = data["name"]
    if not isinstance(name, str) or not name:
        raise TableValidationError(f"{where}: 'name' must be a non-empty string")
    if not _is_int(data["crossings"]) or data["crossings"] <= 0:
        raise TableValidationError(f"{where}: 'crossings' must be a positive integer")
    if not isinstance(data["alternating"], bool):
        raise TableValidationError(f"{where}: 'alternating' must be true or false")

    v1 = data["v1"]
    if not isinstance(v1, dict) or "min_deg" not in v1 or "coeffs" not in v1:
        raise TableValidationError(
            f"{where}: 'v1' must be an object with 'min_deg' and 'coeffs'"
        )
    if not _is_int(v1["min_deg"]):
        raise TableValidationError(f"{where}: 'v1.min_deg' must be an integer")
    coeffs = v1["coeffs"]
    if not isinstance(coeffs, list):
        raise TableValidationError(f"{where}: 'v1.coeffs' must be a list")
    for i, coeff in enumerate(coeffs):
        if not _is_int(coeff):
            raise TableValidationError(
                f"{where}: malformed coefficient {coeff!r} at position {i} of 'v1.coeffs'"
            )

    try:
        polynomial = LaurentPoly(coeffs, v1["min_deg"], JONES_VARIABLE)
    except (ValueError, PretzelSmithError) as e:
        raise TableValidationError(f"{where}: invalid polynomial: {e}") from e
    if polynomial.is_zero():
        raise TableValidationError(f"{where}: 'v1' must be a nonzero polynomial")

    return KnotRecord(name, data["crossings"], data["alternating"], polynomial)


def _parse_lines(lines: Iterable[str], source: str) -> List[KnotRecord]:
    records: List[KnotRecord] = []
    first_seen: Dict[str, int] = {}
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        where = f"{source} line {line_number}"
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise TableValidationError(f"{where}: invalid JSON: {e}") from e
        record = parse_record(data, where)
        if record.name in first_seen:
            raise DuplicateRecordError(
                f"{where}: duplicate knot '{record.name}' "
                f"(first seen on line {first_seen[record.name]})"
            )
        first_seen[record.name] = line_number
        records.append(record)
    return records


def load_table(path: PathLike) -> List[KnotRecord]:
    """
    Load knot records from a JSON-lines file.

    Blank lines are skipped.

    Args:
        path: Path to the table

    Returns:
        Records in file order

    Raises:
        FileNotFoundError: If the file does not exist
        TableValidationError: If a line is malformed (the message names the line)
        DuplicateRecordError: If a knot name repeats

    Example:
        >>> records = load_table(FIXTURE_8_21_PATH)
        >>> records[0].name, len(list(records[0].v1.terms()))
        ('8_21', 7)
    """
    table_path = Path(path)
    if not table_path.exists():
        raise FileNotFoundError(f"Table file not found: {path}")

    with open(table_path, "r", encoding="utf-8") as f:
        records = _parse_lines(f, table_path.name)

    logger.info("Loaded %d knot records from '%s'", len(records), path)
    return records


def parse_table_text(text: str, source: str = "request") -> List[KnotRecord]:
    """
    Parse JSON-lines table content held in memory.

    Raises:
        TableValidationError: As for load_table
    """
    return _parse_lines(text.splitlines(), source)


def save_table(records: Iterable[KnotRecord], path: PathLike) -> None:
    """
    Write records as JSON lines, one compact object per line.

    Raises:
        TypeError: If an item is not a KnotRecord
        IOError: If the file cannot be written
    """
    lines = []
    for record in records:
        if not isinstance(record, KnotRecord):
            raise TypeError(f"Expected KnotRecord instance, got {type(record).__name__}")
        lines.append(json.dumps(record.to_dict(), separators=(",", ":")))

    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with open(output_path, "w", encoding="utf-8") as f:
            for line in lines:
                f.write(line + "\n")
        logger.debug("Saved %d knot records to '%s'", len(lines), path)
    except IOError as e:
        raise IOError(f"Failed to write table to '{path}': {e}") from e


def validate_table_file(path: PathLike) -> bool:
    """
    Validate a table file.

    Returns:
        True if every line parses

    Raises:
        FileNotFoundError, TableValidationError: As for load_table
    """
    load_table(path)
    return True


def load_known_pretzels(path: Optional[PathLike] = None) -> List[KnownKnot]:
    """
    Read the bundled list of knots up to nine crossings with their pretzel status.

    Raises:
        TableValidationError: If the file is malformed
    """
    source = Path(path) if path is not None else KNOWN_PRETZELS_PATH
    try:
        with open(source, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise TableValidationError(f"Invalid JSON in '{source}': {e}") from e

    if not isinstance(data, list):
        raise TableValidationError(f"'{source}' must contain a JSON array")

    known = []
    for i, item in enumerate(data):
        try:
            diagram = item["diagram"]
            known.append(
                KnownKnot(
                    name=item["name"],
                    crossings=int(item["crossings"]),
                    alternating=bool(item["alternating"]),
                    diagram=PretzelDiagram(diagram) if diagram is not None else None,
                )
            )
        except (KeyError, TypeError, ValueError, PretzelSmithError) as e:
            raise TableValidationError(f"'{source}' item {i} is invalid: {e}") from e
    return known

"""
Text and JSON rendering for command-line and API output.

Every renderer returns a string without a trailing newline and produces
identical output for identical input.
"""

import json
from typing import List, Sequence

from pretzelsmith.core.census import CensusEntry, count_by_case
from pretzelsmith.core.diagram import DiagramParams, PretzelDiagram
from pretzelsmith.tables.matcher import ClassificationReport


def _align(rows: Sequence[Sequence[str]]) -> List[str]:
    """Left-align columns, two spaces apart, no trailing blanks."""
    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return lines


def to_json(payload: object) -> str:
    """Stable JSON: two-space indent, keys in insertion order."""
    return json.dumps(payload, indent=2)


def render_census_text(entries: Sequence[CensusEntry], S: int) -> str:
    """
    Census as an aligned table followed by per-case counts.

    Example:
        (9,0)      S=10  case=1  knot
        ...
        # S=10: 71 diagrams; case 1: 3, case 2: 47, ...
    """
    rows = [
        (
            str(entry.diagram),
            f"S={entry.verdict.S}",
            f"case={entry.verdict.case_label}",
            "knot" if entry.is_knot else "link",
        )
        for entry in entries
    ]
    counts = count_by_case(entries)
    summary = ", ".join(f"case {label}: {n}" for label, n in counts.items())
    footer = f"# S={S}: {len(entries)} diagrams"
    if summary:
        footer = f"{footer}; {summary}"
    return "\n".join(_align(rows) + [footer])


def render_census_json(entries: Sequence[CensusEntry]) -> str:
    """Census as a JSON array of entry objects."""
    return to_json([entry.to_dict() for entry in entries])


def render_reports_text(reports: Sequence[ClassificationReport]) -> str:
    """
    Classification reports as an aligned table.

    Candidates are listed up to mirror image.
    """
    rows = [("name", "span_V", "verdict", "candidates (up to mirror)")]
    for report in reports:
        candidates = " ".join(str(d) for d in report.candidates) or "-"
        rows.append((report.name, str(report.span_V), report.verdict.value, candidates))
    return "\n".join(_align(rows))


def render_reports_json(reports: Sequence[ClassificationReport]) -> str:
    """Classification reports as a JSON array."""
    return to_json([report.to_dict() for report in reports])


def render_params(diagram: PretzelDiagram, prm: DiagramParams) -> str:
    """
    A diagram and its parameters on two lines.

    Example:
        (2,-3,-4)
        r=1 s=2 z=0 alpha=0 beta=0 lambda=0 Sigma=9 M=2
    """
    fields = " ".join(
        f"{key}={'-' if value is None else value}" for key, value in prm.to_dict().items()
    )
    return f"{diagram}\n{fields}"

"""
Match knot-table Jones polynomials against pretzel censuses.

For a record with span S the census of knot diagrams is computed once
and every member's V1 is compared with the record's V1 and with its
t -> 1/t reflection. A record with no match is not a pretzel knot; a
record with matches gets the list of candidate diagrams. Candidates are
only candidates: equal Jones polynomials do not prove isotopy.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from pretzelsmith.core.census import CensusEntry, enumerate as enumerate_census
from pretzelsmith.core.diagram import PretzelDiagram, canonical, reduce
from pretzelsmith.core.laurent import LaurentPoly, mirror
from pretzelsmith.core.planar import jones1
from pretzelsmith.tables.table_loader import KnotRecord, KnownKnot, span_v

logger = logging.getLogger(__name__)

CensusProvider = Callable[[int], Sequence[CensusEntry]]


class Verdict(Enum):
    """Outcome of matching one record."""

    NOT_PRETZEL = "NOT_PRETZEL"
    CANDIDATES = "CANDIDATES"


@dataclass(frozen=True)
class ClassificationReport:
    """
    Pretzel candidacy of one knot-table record.

    Attributes:
        name: Knot name
        span_V: Span of V for the record
        candidates: Canonical census diagrams whose V1 equals the record's
            up to t -> 1/t, sorted
        verdict: NOT_PRETZEL when there are no candidates
    """

    name: str
    span_V: int
    candidates: Tuple[PretzelDiagram, ...]
    verdict: Verdict

    def to_dict(self) -> Dict[str, object]:
        """JSON form of the report."""
        return {
            "name": self.name,
            "span_V": self.span_V,
            "verdict": self.verdict.value,
            "candidates": [list(d.entries) for d in self.candidates],
        }


class _CensusCache:
    """Per-span census and per-diagram V1, computed on first use."""

    def __init__(self, census_for: Optional[CensusProvider], jobs: Optional[int]):
        self._census_for = census_for
        self._jobs = jobs
        self._censuses: Dict[int, Sequence[CensusEntry]] = {}
        self._v1: Dict[PretzelDiagram, LaurentPoly] = {}

    def census(self, S: int) -> Sequence[CensusEntry]:
        if S not in self._censuses:
            if self._census_for is not None:
                self._censuses[S] = self._census_for(S)
            else:
                self._censuses[S] = enumerate_census(S, knots_only=True, jobs=self._jobs)
        return self._censuses[S]

    def v1(self, diagram: PretzelDiagram) -> LaurentPoly:
        if diagram not in self._v1:
            self._v1[diagram] = jones1(diagram)
        return self._v1[diagram]


def _match(record: KnotRecord, cache: _CensusCache) -> ClassificationReport:
    S = span_v(record)
    targets = {record.v1, mirror(record.v1)}
    matches = set()
    for entry in cache.census(S):
        if not entry.is_knot:
            continue
        if cache.v1(entry.diagram) in targets:
            matches.add(canonical(entry.diagram))
    candidates = tuple(sorted(matches))
    verdict = Verdict.CANDIDATES if candidates else Verdict.NOT_PRETZEL
    logger.debug("%s: S=%d, %d candidates", record.name, S, len(candidates))
    return ClassificationReport(record.name, S, candidates, verdict)


def classify(
    records: Iterable[KnotRecord],
    census_for: Optional[CensusProvider] = None,
    jobs: Optional[int] = None,
    span: Optional[int] = None,
) -> List[ClassificationReport]:
    """
    Classify knot-table records by matching their V1 against censuses.

    Args:
        records: Knot records
        census_for: Census supplier keyed by span; defaults to the knot
            census of the core enumerator
        jobs: Worker processes used when computing a census
        span: When given, only records whose span of V equals it are
            classified

    Returns:
        One report per classified record, in input order

    Example:
        >>> from pretzelsmith.tables.table_loader import load_table, FIXTURE_8_21_PATH
        >>> report = classify(load_table(FIXTURE_8_21_PATH))[0]
        >>> report.verdict.value, str(report.candidates[0])
        ('CANDIDATES', '(3,3,-1,-2)')
    """
    cache = _CensusCache(census_for, jobs)
    reports = []
    for record in records:
        if span is not None and span_v(record) != span:
            continue
        reports.append(_match(record, cache))

    found = sum(1 for r in reports if r.verdict is Verdict.CANDIDATES)
    logger.info(
        "Classified %d records: %d with candidates, %d not pretzel",
        len(reports),
        found,
        len(reports) - found,
    )
    return reports


def audit(
    reports: Iterable[ClassificationReport], known: Iterable[KnownKnot]
) -> List[str]:
    """
    Compare reports with the known pretzel status of each knot.

    Reports for knots missing from ``known`` are ignored.

    Returns:
        One message per discrepancy; empty when everything agrees
    """
    by_name = {knot.name: knot for knot in known}
    problems = []
    for report in reports:
        knot = by_name.get(report.name)
        if knot is None:
            continue
        if not knot.is_pretzel:
            if report.candidates:
                problems.append(
                    f"{report.name}: not pretzel but has {len(report.candidates)} candidate(s)"
                )
            continue
        expected = canonical(reduce(knot.diagram))
        if expected not in report.candidates:
            problems.append(f"{report.name}: {expected} missing from candidates")

    if problems:
        logger.warning("Audit found %d discrepancies", len(problems))
    return problems

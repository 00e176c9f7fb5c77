"""
Finite complete sets of pretzel diagrams with a given Jones span.

The census walks every reduced diagram allowed by the span bounds. It goes
through multisets of "big" entries (|a| >= 2) and adds either zero columns
or a net run of +-1 columns. It keeps diagrams whose span equals the
target, drops torus and trivial representatives, and dedups by canonical
form. Work is split by big-entry multiset, so it fans out across
processes without shared state.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from pretzelsmith.core.diagram import (
    PretzelDiagram,
    is_knot,
)
from pretzelsmith.core.planar import jones_span
from pretzelsmith.core.spanlaw import (
    SpanVerdict,
    case_sort_key,
    check_bounds,
    is_census_excluded,
    is_torus_like,
    lower_bound,
    proposition_bounds,
    span_formula,
)
from pretzelsmith.core.validator import PretzelSmithError, parse_entries
from pretzelsmith.utils.parallel import map_batches

logger = logging.getLogger(__name__)

BRUTE_CENSUS_MAX_SPAN = 12
GOLDEN_L10_PATH = Path(__file__).parent.parent / "tables" / "L10.txt"


class CensusTooLargeError(PretzelSmithError):
    """Raised when a census is requested beyond its cost guard."""


class CensusBoundsError(PretzelSmithError):
    """Raised when a census entry falls outside the span bounds."""


@dataclass(frozen=True)
class CensusEntry:
    """
    One member of a census.

    Attributes:
        diagram: Canonical, reduced, sorted diagram
        verdict: Span verdict of that diagram
        is_knot: True when the diagram closes to a single component
    """

    diagram: PretzelDiagram
    verdict: SpanVerdict
    is_knot: bool

    def sort_key(self) -> Tuple[Tuple[int, int, int], Tuple[int, ...]]:
        """Census order: case label, then canonical tuple."""
        return case_sort_key(self.verdict.case_label), self.diagram.entries

    def to_dict(self) -> Dict[str, object]:
        """JSON form: diagram, S, case and knot flag."""
        return {
            "diagram": list(self.diagram.entries),
            "S": self.verdict.S,
            "case": self.verdict.case_label,
            "knot": self.is_knot,
        }


def _big_multisets(
    entry_max: int, count_max: int, sigma_max: int, knots_only: bool
) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of entries with 2 <= |a| <= entry_max."""
    values = [a for a in range(entry_max, 1, -1)] + [-a for a in range(2, entry_max + 1)]

    def extend(start: int, prefix: List[int], weight: int, evens: int):
        yield tuple(prefix)
        if len(prefix) == count_max:
            return
        for index in range(start, len(values)):
            value = values[index]
            magnitude = abs(value)
            if weight + magnitude > sigma_max:
                continue
            parity = evens + (1 - magnitude % 2)
            # a second even entry can never be repaired by +-1 or 0 columns
            if knots_only and parity > 1:
                continue
            prefix.append(value)
            yield from extend(index, prefix, weight + magnitude, parity)
            prefix.pop()

    yield from extend(0, [], 0, 0)


def _candidates(big: Tuple[int, ...], S: int, knots_only: bool) -> Iterator[PretzelDiagram]:
    """Reduced sorted diagrams built from one big-entry multiset."""
    bounds = proposition_bounds(S)
    positives = [a for a in big if a > 0]
    negatives = [a for a in big if a < 0]
    evens = sum(1 for a in big if a % 2 == 0)

    for z in range(1, bounds.z_max + 1):
        if len(big) + z > bounds.n_max:
            break
        if knots_only and evens + z != 1:
            continue
        yield PretzelDiagram(positives + [0] * z + negatives)

    for lam in range(-bounds.lambda_max, bounds.lambda_max + 1):
        n = len(big) + abs(lam)
        if n == 0 or n > bounds.n_max:
            continue
        if knots_only and not (evens == 1 or (evens == 0 and n % 2 == 1)):
            continue
        ones = [1] * lam if lam > 0 else []
        minus_ones = [-1] * -lam if lam < 0 else []
        yield PretzelDiagram(positives + ones + minus_ones + negatives)

    if not big and not knots_only:
        yield PretzelDiagram((1, -1))


def _require_bounds(S: int, diagram: PretzelDiagram, verdict: SpanVerdict) -> None:
    if not check_bounds(S, diagram):
        raise CensusBoundsError(f"outside the span bounds for S={S}: {diagram}")
    # torus links are exempt from the lower bound
    if not is_torus_like(diagram, verdict) and lower_bound(diagram) > S:
        raise CensusBoundsError(
            f"below the lower bound {lower_bound(diagram)} for S={S}: {diagram}"
        )


Evaluator = Callable[[PretzelDiagram], SpanVerdict]


def _formula_verdict(diagram: PretzelDiagram) -> SpanVerdict:
    return span_formula(diagram)


def _bracket_verdict(diagram: PretzelDiagram) -> SpanVerdict:
    label = span_formula(diagram)
    return SpanVerdict(jones_span(diagram), label.case_label, label.mirrored)


def _scan(
    bigs: Sequence[Tuple[int, ...]], S: int, knots_only: bool, use_bracket: bool
) -> Tuple[List[CensusEntry], int]:
    """Census entries reachable from a batch of big-entry multisets."""
    evaluate: Evaluator = _bracket_verdict if use_bracket else _formula_verdict
    entries = []
    scanned = 0
    for big in bigs:
        for diagram in _candidates(big, S, knots_only):
            # diagram is sorted, so its sorted mirror is the reversed negation
            if tuple(-a for a in reversed(diagram.entries)) > diagram.entries:
                continue
            scanned += 1
            verdict = evaluate(diagram)
            if verdict.S != S or is_census_excluded(verdict.case_label):
                continue
            _require_bounds(S, diagram, verdict)
            knot = is_knot(diagram)
            if knots_only and not knot:
                continue
            entries.append(CensusEntry(diagram, verdict, knot))
    return entries, scanned


def _run(S: int, knots_only: bool, use_bracket: bool, jobs: Optional[int]) -> List[CensusEntry]:
    if S < 0:
        raise ValueError(f"Span must be non-negative, got {S}")
    bounds = proposition_bounds(S)
    bigs = list(
        _big_multisets(bounds.entry_max, bounds.rs_max, bounds.sigma_max, knots_only)
    )
    logger.debug("Span %d: %d big-entry multisets", S, len(bigs))

    entries, scanned = [], 0
    scan = partial(_scan, S=S, knots_only=knots_only, use_bracket=use_bracket)
    for part, count in map_batches(scan, bigs, jobs):
        entries.extend(part)
        scanned += count

    entries.sort(key=CensusEntry.sort_key)
    logger.info(
        "Census S=%d (%s, %s): %d canonical candidates, %d kept",
        S,
        "knots" if knots_only else "all",
        "bracket" if use_bracket else "formula",
        scanned,
        len(entries),
    )
    return entries


def enumerate(  # pylint: disable=redefined-builtin
    S: int, knots_only: bool = False, jobs: Optional[int] = None
) -> List[CensusEntry]:
    """
    Complete set of reduced pretzel diagrams with span S.

    Args:
        S: Target span of the Jones polynomial
        knots_only: Keep single-component diagrams only
        jobs: Worker processes; None or 1 runs in-process

    Returns:
        Census entries sorted by (case label, canonical tuple); the order
        does not depend on ``jobs``

    Example:
        >>> [str(e.diagram) for e in enumerate(4, knots_only=True)][:1]
        ['(3,0)']
    """
    return _run(S, knots_only, False, jobs)


def brute_census(
    S: int, knots_only: bool = False, jobs: Optional[int] = None
) -> List[CensusEntry]:
    """
    Same census with spans taken from the bracket instead of the case law.

    Case labels still come from the case law so that exclusions match.

    Raises:
        CensusTooLargeError: If S exceeds BRUTE_CENSUS_MAX_SPAN
    """
    if S > BRUTE_CENSUS_MAX_SPAN:
        raise CensusTooLargeError(
            f"too large: brute census is capped at S={BRUTE_CENSUS_MAX_SPAN}, got {S}"
        )
    return _run(S, knots_only, True, jobs)


def diagram_set(entries: Sequence[CensusEntry]) -> Set[PretzelDiagram]:
    """Canonical diagrams of a census as a set."""
    return {entry.diagram for entry in entries}


def compare_censuses(
    left: Sequence[CensusEntry], right: Sequence[CensusEntry]
) -> Tuple[List[PretzelDiagram], List[PretzelDiagram]]:
    """Diagrams only in ``left`` and only in ``right``, each sorted."""
    a, b = diagram_set(left), diagram_set(right)
    return sorted(a - b), sorted(b - a)


def count_by_case(entries: Sequence[CensusEntry]) -> Dict[str, int]:
    """Number of entries per case label, in census order."""
    counts = Counter(entry.verdict.case_label for entry in entries)
    return {label: counts[label] for label in sorted(counts, key=case_sort_key)}


def load_golden_l10(path: Optional[Path] = None) -> List[PretzelDiagram]:
    """
    Read the printed list of span-10 knot diagrams.

    Lines hold one ``(a1,...,an)`` tuple; blank lines and ``#`` comments are
    skipped. Tuples are returned as printed, not canonicalized.
    """
    source = Path(path) if path is not None else GOLDEN_L10_PATH
    diagrams = []
    with open(source, "r", encoding="utf-8") as f:
        for line in f:
            text = line.split("#", 1)[0].strip()
            if text:
                diagrams.append(PretzelDiagram(parse_entries(text)))
    return diagrams


"""
Span law for reduced pretzel diagrams.

``span_formula`` returns the span of the Jones polynomial of a reduced,
descending-sorted diagram together with the label of the case that
produced it. Case labels follow the numbering of the classification
("1", "2", "3.1" ... "7.16", plus "-exception" suffixes for the handful
of sporadic diagrams), so census output and test reports can cite the
branch that fired.

The module also holds the span bounds used to keep the census finite.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from pretzelsmith.core.diagram import (
    DiagramLike,
    PretzelDiagram,
    absorb_one_minus_two,
    as_diagram,
    is_reduced,
    params,
    sort_desc,
)
from pretzelsmith.core.planar import jones_span
from pretzelsmith.core.validator import (
    NotReducedError,
    PretzelSmithError,
    require_sorted_desc,
)

logger = logging.getLogger(__name__)

# two-strand torus links and the unknot; excluded from the lower-bound check
TORUS_CASES = frozenset({"4.2", "4.3", "4.4", "6.2", "7.1", "7.2", "7.3", "7.4"})

# represented in a census by a type-1 or type-2 diagram of the same link
CENSUS_EXCLUDED_CASES = frozenset({"3.2", "3.3", "4.1", "4.2", "4.3", "4.4", "6.1", "6.2"})


class SpanLawError(PretzelSmithError):
    """Raised when the case dispatch reaches an impossible state."""


class SpanDisagreementError(PretzelSmithError):
    """Raised when the span law and the bracket give different spans."""


@dataclass(frozen=True)
class SpanVerdict:
    """
    Span of the Jones polynomial and the case that produced it.

    Attributes:
        S: Span of V
        case_label: Case label such as "2", "5.3-exception" or "7.14"
        mirrored: True when the diagram was reflected before dispatch
    """

    S: int
    case_label: str
    mirrored: bool = False

    def to_dict(self) -> Dict[str, Union[int, str, bool]]:
        """JSON form."""
        return {"S": self.S, "case": self.case_label, "mirrored": self.mirrored}

    def __str__(self) -> str:
        text = f"S={self.S} case={self.case_label}"
        return f"{text} (mirrored)" if self.mirrored else text


@dataclass(frozen=True)
class SpanBounds:
    """
    Limits every reduced diagram of span S obeys (torus links aside).

    Attributes:
        z_max: Largest zero count
        rs_max: Largest number of entries with |a_i| > 1
        lambda_max: Largest |alpha - beta|
        entry_max: Largest |a_i|
        n_max: Largest number of entries
        sigma_max: Largest Sigma; from S >= Sigma - M - 4 with M <= S + 4
    """

    z_max: int
    rs_max: int
    lambda_max: int
    entry_max: int
    n_max: int
    sigma_max: int


SIGMA_CAP_SLOPE = 2
SIGMA_CAP_OFFSET = 8


def proposition_bounds(S: int) -> SpanBounds:
    """
    Integer form of the span bounds for a target span S.

    Fractional limits such as S/2 + 3 are floored, which is exact for the
    integer parameters they bound.
    """
    if S < 0:
        raise ValueError(f"Span must be non-negative, got {S}")
    return SpanBounds(
        z_max=S,
        rs_max=S // 2 + 3,
        lambda_max=max(S // 2 + 2, S - 1),
        entry_max=S + 4,
        n_max=max(2 * S + 5, (5 * S) // 2 + 2),
        sigma_max=SIGMA_CAP_SLOPE * S + SIGMA_CAP_OFFSET,
    )


def case_sort_key(label: str) -> Tuple[int, int, int]:
    """
    Numeric ordering of case labels.

    Example:
        >>> sorted(["7.10", "5.3-exception", "7.2", "5.3"], key=case_sort_key)
        ['5.3', '5.3-exception', '7.2', '7.10']
    """
    head, _, suffix = label.partition("-")
    parts = [int(piece) for piece in head.split(".")]
    major = parts[0]
    minor = parts[1] if len(parts) > 1 else 0
    return (major, minor, 1 if suffix else 0)


def is_census_excluded(label: str) -> bool:
    """True for torus, trivial and type-7 labels a census leaves out."""
    return label in CENSUS_EXCLUDED_CASES or label.startswith("7.")


def torus_span(q: int) -> int:
    """
    Span of V for the two-strand torus link T(2, q).

    T(2, 0) is the two-component unlink and T(2, +-1) the unknot.
    """
    if q == 0:
        return 2
    if abs(q) == 1:
        return 1
    return abs(q) + 1


def _item3(entries: Tuple[int, ...], r: int, lam: int, s: int, sigma: int) -> Tuple[int, str]:
    if (r, lam, s) != (2, -1, 0):
        return sigma - 1, "3.1"
    # (a1, a2, -1): a -1 column against two positives
    a1, a2 = entries[0], entries[1]
    if a2 == 2:
        if a1 == 2:
            return 2, "3.2"
        if a1 == 3:
            return 1, "3.3"
        return a1 - 1, "3.4"
    return a1 + a2 - 2, "3.5"


def _item4(entries: Tuple[int, ...], s: int) -> Tuple[int, str]:
    if s == 0:
        return 1, "4.1"
    # P(a1, a2) is T(2, a1 + a2)
    q = entries[0] + entries[1]
    if q == 0:
        return torus_span(q), "4.2"
    if abs(q) == 1:
        return torus_span(q), "4.3"
    return torus_span(q), "4.4"


def _item5(entries: Tuple[int, ...], s: int, sigma: int) -> Tuple[int, str]:
    a1 = entries[0]
    b = [abs(a) for a in entries[1:]]  # ascending magnitudes of the negatives
    if a1 != b[0] - 1:
        return sigma - min(a1, b[0] - 1), "5.1"
    if b[0] != b[1] - 1:
        return sigma - min(b[0], b[1] - 1), "5.2"
    # a1, |a2|, |a3| are consecutive from here
    if s == 2:
        if entries == (2, -3, -4):
            return 3, "5.3-exception"
        return 2 * a1, "5.3"
    if b[1] < b[2] - 1:
        if len(entries) == 4 and entries[:3] == (2, -3, -4) and entries[3] < -6:
            return sigma - 6, "5.4-exception"
        return sigma - a1 - 3, "5.4"
    if b[1] == b[2] - 1:
        return sigma - a1 - 2, "5.5"
    return sigma - a1 - 1, "5.6"


def _item6(entries: Tuple[int, ...], s: int, sigma: int) -> Tuple[int, str]:
    if s == 0:
        return 1, "6.1"
    if s == 1:
        # P(1, a2) is T(2, 1 + a2)
        return torus_span(1 + entries[1]), "6.2"
    if s == 2:
        return sigma - 2, "6.3"
    return sigma - 1, "6.4"


def _item7(entries: Tuple[int, ...], s: int, sigma: int) -> Tuple[int, str]:
    # entries = (1, -2, a3, a4, ...) with a3 >= a4 >= ... all <= -2
    a3 = entries[2] if s >= 2 else None
    a4 = entries[3] if s >= 3 else None
    a5 = entries[4] if s >= 4 else None
    if s == 1:
        return torus_span(-1), "7.1"
    if s == 2:
        # P(1, -2, a3) = P(2, a3) = T(2, 2 + a3)
        if a3 == -2:
            return torus_span(0), "7.2"
        if a3 == -3:
            return torus_span(-1), "7.3"
        return torus_span(2 + a3), "7.4"
    if s == 3:
        if a3 == -2:
            return sigma - 1, "7.5"
        if a3 == -3:
            if a4 == -3:
                return sigma - 2, "7.6"
            if a4 == -4:
                return sigma - 6, "7.7"
            return sigma - 3, "7.8"
        return sigma - 2, "7.9"
    if a3 == -2:
        return sigma - 1, "7.10"
    if a3 == -3:
        if a4 == -3:
            return sigma - 2, "7.11"
        if a4 == -4:
            if a5 == -4:
                return sigma - 3, "7.12"
            if a5 == -5:
                return sigma - 4, "7.13"
            if len(entries) == 5 and a5 < -6:
                return sigma - 6, "7.14-exception"
            return sigma - 5, "7.14"
        return sigma - 3, "7.15"
    return sigma - 2, "7.16"


def _dispatch(entries: Tuple[int, ...], mirrored: bool) -> SpanVerdict:
    prm = params(entries)
    r, s, z, lam, sigma = prm.r, prm.s, prm.z, prm.lam, prm.sigma

    if z > 0:
        return SpanVerdict(sigma + z, "1", mirrored)

    # adequate diagrams
    if r + lam != 1 and s - lam != 1:
        if entries == (1, -1):
            return SpanVerdict(2, "2-exception", mirrored)
        return SpanVerdict(sigma - min(1, r + lam, s - lam) + 1, "2", mirrored)

    if r + lam != 1:
        if mirrored:
            raise SpanLawError(f"reflection of {entries} did not reach r + lambda = 1")
        reflected = tuple(sorted((-a for a in entries), reverse=True))
        logger.debug("Reflecting %s to %s (s - lambda = 1)", entries, reflected)
        return _dispatch(reflected, True)

    # r + lambda = 1 from here
    if r > 1:
        S, label = _item3(entries, r, lam, s, sigma)
    elif r == 1:
        S, label = _item4(entries, s) if s <= 1 else _item5(entries, s, sigma)
    elif s == 0 or entries[1] != -2:
        S, label = _item6(entries, s, sigma)
    else:
        S, label = _item7(entries, s, sigma)
    return SpanVerdict(S, label, mirrored)


def span_formula(p: DiagramLike) -> SpanVerdict:
    """
    Span of the Jones polynomial from the case law.

    Args:
        p: Reduced diagram with entries in non-increasing order

    Returns:
        SpanVerdict with S, the case label and the reflection flag

    Raises:
        NotReducedError: If p is not reduced
        NotSortedError: If p is not sorted in non-increasing order

    Example:
        >>> str(span_formula((2, -3, -4)))
        'S=3 case=5.3-exception'
        >>> str(span_formula((1, -1)))
        'S=2 case=2-exception'
    """
    diagram = as_diagram(p)
    if not is_reduced(diagram):
        raise NotReducedError(f"not reduced: {diagram}")
    require_sorted_desc(diagram.entries)
    return _dispatch(diagram.entries, False)


def span_via_rewrite(p: DiagramLike) -> Optional[SpanVerdict]:
    """
    Span of a type-7 diagram through the P(1, -2, ...) = P(2, ...) rewrite.

    Returns:
        The verdict of the rewritten diagram, or None when p has no (1, -2)
        pair to absorb
    """
    rewritten = absorb_one_minus_two(as_diagram(p))
    if rewritten is None:
        return None
    return span_formula(sort_desc(rewritten))


def lower_bound(p: DiagramLike) -> int:
    """
    Sigma - M - 4, with Sigma = M = 0 when no entry has |a_i| > 1.

    Example:
        >>> lower_bound((2, -3, -4))
        3
    """
    prm = params(p)
    if prm.M is None:
        return -4
    return prm.sigma - prm.M - 4


def check_bounds(S: int, p: DiagramLike) -> bool:
    """
    True when the parameters of p respect every span bound for S.

    The checks are z <= S, r + s <= S/2 + 3, |lambda| <= max(S/2 + 2, S - 1),
    |a_i| <= S + 4 and n <= max(2S + 5, 5S/2 + 2).
    """
    diagram = as_diagram(p)
    bounds = proposition_bounds(S)
    prm = params(diagram)
    return (
        prm.z <= bounds.z_max
        and prm.r + prm.s <= bounds.rs_max
        and abs(prm.lam) <= bounds.lambda_max
        and all(abs(a) <= bounds.entry_max for a in diagram.entries)
        and len(diagram) <= bounds.n_max
    )


def is_torus_like(p: DiagramLike, verdict: SpanVerdict) -> bool:
    """True for diagrams the lower bound does not apply to."""
    diagram: PretzelDiagram = as_diagram(p)
    return len(diagram) <= 2 or verdict.case_label in TORUS_CASES


def span_checked(p: DiagramLike) -> SpanVerdict:
    """
    Span law verdict confirmed against the bracket.

    Raises:
        SpanDisagreementError: If span_formula and jones_span differ

    Example:
        >>> str(span_checked((2, -3, -4)))
        'S=3 case=5.3-exception'
    """
    verdict = span_formula(p)
    measured = jones_span(p)
    if measured != verdict.S:
        logger.warning(
            "Span law gives %d (case %s) but the bracket gives %d for %s",
            verdict.S,
            verdict.case_label,
            measured,
            as_diagram(p),
        )
        raise SpanDisagreementError(
            f"span law gives S={verdict.S} (case {verdict.case_label}) "
            f"but the bracket gives S={measured} for {as_diagram(p)}"
        )
    return verdict

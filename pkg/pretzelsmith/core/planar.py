"""
Crossing-level model of a pretzel diagram.

Columns are drawn left to right and each column stacks its crossings top to
bottom. A crossing has four corner endpoints, numbered ``4k + corner`` with
corners TL, TR, BL, BR. Strand segments between crossings, the twist
columns' open ends and the top and bottom closing strands are contracted
into arcs pairing corner endpoints; port cycles that touch no crossing are
counted as free loops.

The model gives three things the closed formulas cannot: a brute-force
state sum for the bracket, component counting by strand tracing, and the
writhe needed for the Jones polynomial.
"""

import logging
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

import numpy as np

from pretzelsmith.core.bracket import kb_closed
from pretzelsmith.core.diagram import DiagramLike, PretzelDiagram, as_diagram
from pretzelsmith.core.laurent import (
    LaurentPoly,
    delta,
    divide_exact,
    monomial,
    span,
    to_t_poly,
    zero,
)
from pretzelsmith.core.validator import PretzelSmithError
from pretzelsmith.utils.disjoint_set import DisjointSet

logger = logging.getLogger(__name__)

TL, TR, BL, BR = 0, 1, 2, 3
CORNER_POSITIONS = np.array([(-1, 1), (1, 1), (-1, -1), (1, -1)], dtype=np.int64)

# partner corner inside one crossing
VERTICAL_SMOOTHING = np.array([BL, BR, TL, TR], dtype=np.int64)
HORIZONTAL_SMOOTHING = np.array([TR, TL, BR, BL], dtype=np.int64)
PASS_THROUGH = np.array([BR, BL, TR, TL], dtype=np.int64)

DEFAULT_MAX_STATE_SUM = 20
MAX_STATE_SUM_ENV = "PRETZEL_MAX_STATE_SUM"
STATE_CHUNK = 1 << 14


class StateSumTooLargeError(PretzelSmithError):
    """Raised when a state sum would exceed the configured crossing cap."""


class NotAKnotError(PretzelSmithError):
    """Raised when a knot-only quantity is requested for a link."""


class SpanConsistencyError(PretzelSmithError):
    """Raised when a bracket span is not a multiple of 4."""


def max_state_sum() -> int:
    """
    Crossing cap for state sums, overridable through PRETZEL_MAX_STATE_SUM.

    Returns:
        The configured cap, or DEFAULT_MAX_STATE_SUM when unset or malformed
    """
    raw = os.environ.get(MAX_STATE_SUM_ENV)
    if raw is None:
        return DEFAULT_MAX_STATE_SUM
    try:
        value = int(raw)
    except ValueError:
        logger.warning(
            "Ignoring %s=%r: not an integer, using %d",
            MAX_STATE_SUM_ENV,
            raw,
            DEFAULT_MAX_STATE_SUM,
        )
        return DEFAULT_MAX_STATE_SUM
    if value < 0:
        logger.warning(
            "Ignoring negative %s=%d, using %d",
            MAX_STATE_SUM_ENV,
            value,
            DEFAULT_MAX_STATE_SUM,
        )
        return DEFAULT_MAX_STATE_SUM
    return value


@dataclass(frozen=True)
class Crossing:
    """
    One crossing of the diagram.

    Attributes:
        index: Position in the global crossing list
        column: Column (0-based) the crossing belongs to
        sign: +1 for a column with a_i > 0, -1 otherwise
    """

    index: int
    column: int
    sign: int

    def endpoint(self, corner: int) -> int:
        """Global endpoint id of one corner."""
        return 4 * self.index + corner


@dataclass(frozen=True)
class PlanarDiagram:
    """
    Crossings plus the arcs joining their corner endpoints.

    Attributes:
        diagram: The pretzel diagram this encodes
        crossings: Crossing records in column order, top to bottom
        arcs: Endpoint pairs, each endpoint appearing in exactly one arc
        partner: partner[e] is the other end of the arc through endpoint e
        free_loops: Closed strands touching no crossing
    """

    diagram: PretzelDiagram
    crossings: Tuple[Crossing, ...]
    arcs: Tuple[Tuple[int, int], ...]
    partner: np.ndarray
    free_loops: int

    @property
    def crossing_count(self) -> int:
        """Number of crossings."""
        return len(self.crossings)

    @property
    def signs(self) -> np.ndarray:
        """Column sign of each crossing as an int64 array."""
        return np.array([c.sign for c in self.crossings], dtype=np.int64)


@dataclass(frozen=True)
class TraceResult:
    """
    Outcome of strand tracing.

    Attributes:
        component_count: Number of link components, free loops included
        orientation: (tail, head) endpoint pair for every arc, in arc order
        writhe: Sum of crossing signs under that orientation
        crossing_signs: Oriented sign of every crossing
        orientation_dependent: True for links, where writhe depends on the
            relative orientation of components
    """

    component_count: int
    orientation: Tuple[Tuple[int, int], ...]
    writhe: int
    crossing_signs: Tuple[int, ...]
    orientation_dependent: bool


def build(p: DiagramLike) -> PlanarDiagram:
    """
    Encode a pretzel diagram at crossing level.

    Args:
        p: Diagram or entry sequence

    Returns:
        PlanarDiagram with sum(|a_i|) crossings

    Example:
        >>> build((2, -3)).crossing_count
        5
        >>> build((0,)).free_loops
        1
    """
    diagram = as_diagram(p)
    links: Dict[Hashable, List[Hashable]] = defaultdict(list)

    def join(u: Hashable, v: Hashable) -> None:
        links[u].append(v)
        links[v].append(u)

    crossings: List[Crossing] = []
    entries = diagram.entries
    for column, a in enumerate(entries):
        sign = 1 if a > 0 else -1
        left: Hashable = ("tl", column)
        right: Hashable = ("tr", column)
        for _ in range(abs(a)):
            crossing = Crossing(len(crossings), column, sign)
            crossings.append(crossing)
            join(left, crossing.endpoint(TL))
            join(right, crossing.endpoint(TR))
            left, right = crossing.endpoint(BL), crossing.endpoint(BR)
        join(left, ("bl", column))
        join(right, ("br", column))

    n = len(entries)
    for column in range(n):
        following = (column + 1) % n
        join(("tr", column), ("tl", following))
        join(("br", column), ("bl", following))

    endpoint_count = 4 * len(crossings)
    partner = np.full(endpoint_count, -1, dtype=np.int64)
    arcs: List[Tuple[int, int]] = []
    seen_ports = set()
    for start in range(endpoint_count):
        if partner[start] >= 0:
            continue
        previous: Hashable = start
        current = links[start][0]
        while not isinstance(current, int):
            seen_ports.add(current)
            first, second = links[current]
            previous, current = current, (second if first == previous else first)
        partner[start] = current
        partner[current] = start
        arcs.append((start, current))

    # ports never reached from a crossing close up among themselves
    loose_ports = [
        node for node in links if not isinstance(node, int) and node not in seen_ports
    ]
    loops = DisjointSet(loose_ports)
    for node in loose_ports:
        for neighbour in links[node]:
            loops.merge(node, neighbour)
    free_loops = loops.class_count()

    partner.setflags(write=False)
    logger.debug(
        "Built %s: %d crossings, %d arcs, %d free loops",
        diagram,
        len(crossings),
        len(arcs),
        free_loops,
    )
    return PlanarDiagram(diagram, tuple(crossings), tuple(arcs), partner, free_loops)


def _count_cycles(walk: np.ndarray) -> np.ndarray:
    """Cycle count of each row permutation, by pointer-jumping min labels."""
    rows, width = walk.shape
    label = np.broadcast_to(np.arange(width, dtype=np.int64), (rows, width)).copy()
    jump = walk.copy()
    for _ in range(max(1, width.bit_length())):
        label = np.minimum(label, np.take_along_axis(label, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
    return (label == np.arange(width, dtype=np.int64)).sum(axis=1)


def state_sum(pd: PlanarDiagram) -> LaurentPoly:
    """
    Bracket as a sum over all 2^c smoothings.

    Each state contributes A^(#A - #B) * delta^(#circles). A vertical
    smoothing is the A-smoothing in a positive column and the B-smoothing in
    a negative one.

    Raises:
        StateSumTooLargeError: Beyond the crossing cap from max_state_sum()
    """
    c = pd.crossing_count
    cap = max_state_sum()
    if c > cap:
        raise StateSumTooLargeError(
            f"state sum too large: {c} crossings exceed the cap of {cap} "
            f"(set {MAX_STATE_SUM_ENV} to raise it)"
        )
    if c == 0:
        return delta() ** pd.free_loops

    signs = pd.signs
    base = 4 * np.repeat(np.arange(c, dtype=np.int64), 4)
    vertical = base + np.tile(VERTICAL_SMOOTHING, c)
    horizontal = base + np.tile(HORIZONTAL_SMOOTHING, c)
    bit_weights = np.arange(c, dtype=np.int64)

    tallies: Dict[int, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    total = 1 << c
    for start in range(0, total, STATE_CHUNK):
        states = np.arange(start, min(total, start + STATE_CHUNK), dtype=np.int64)
        is_vertical = ((states[:, None] >> bit_weights) & 1).astype(bool)
        exponents = np.where(is_vertical, signs, -signs).sum(axis=1)
        smoothing = np.where(np.repeat(is_vertical, 4, axis=1), vertical, horizontal)
        walk = pd.partner[smoothing]
        circles = _count_cycles(walk) // 2 + pd.free_loops

        keys = (exponents + c) * (4 * c + pd.free_loops + 2) + circles
        unique, counts = np.unique(keys, return_counts=True)
        for key, count in zip(unique.tolist(), counts.tolist()):
            exp, loops = divmod(key, 4 * c + pd.free_loops + 2)
            tallies[loops][exp - c] += count
        logger.debug("State sum %s: states %d..%d done", pd.diagram, start, states[-1])

    result = zero()
    d = delta()
    for loops, by_exponent in sorted(tallies.items()):
        result = result + LaurentPoly.from_terms(dict(by_exponent)) * d**loops
    return result


def trace(pd: PlanarDiagram) -> TraceResult:
    """
    Trace strands to count components, orient them and compute the writhe.

    Each component is oriented from its lowest-indexed arc, running that arc
    from its lower endpoint. The over strand of a positive column runs TR-BL
    and of a negative column TL-BR.
    """
    endpoint_count = 4 * pd.crossing_count
    arc_of = np.empty(endpoint_count, dtype=np.int64)
    for index, (u, v) in enumerate(pd.arcs):
        arc_of[u] = index
        arc_of[v] = index

    orientation: List[Tuple[int, int]] = [(-1, -1)] * len(pd.arcs)
    slash = np.zeros((pd.crossing_count, 2), dtype=np.int64)
    backslash = np.zeros((pd.crossing_count, 2), dtype=np.int64)
    components = pd.free_loops

    for first_arc, (tail, _) in enumerate(pd.arcs):
        if orientation[first_arc][0] >= 0:
            continue
        components += 1
        current = tail
        while orientation[arc_of[current]][0] < 0:
            head = int(pd.partner[current])
            orientation[arc_of[current]] = (current, head)
            exit_corner = int(PASS_THROUGH[head % 4])
            crossing = head // 4
            direction = CORNER_POSITIONS[exit_corner] - CORNER_POSITIONS[head % 4]
            if head % 4 in (TR, BL):
                slash[crossing] = direction
            else:
                backslash[crossing] = direction
            current = 4 * crossing + exit_corner

    crossing_signs = []
    for crossing in pd.crossings:
        if crossing.sign > 0:
            over, under = slash[crossing.index], backslash[crossing.index]
        else:
            over, under = backslash[crossing.index], slash[crossing.index]
        cross = int(over[0] * under[1] - over[1] * under[0])
        crossing_signs.append(1 if cross > 0 else -1)

    return TraceResult(
        component_count=components,
        orientation=tuple(orientation),
        writhe=sum(crossing_signs),
        crossing_signs=tuple(crossing_signs),
        orientation_dependent=components > 1,
    )


def component_count(p: DiagramLike) -> int:
    """Number of components found by strand tracing."""
    return trace(build(p)).component_count


def jones_a(p: DiagramLike) -> LaurentPoly:
    """
    V = (-A)^(-3w) <P> in the bracket variable.

    For links the writhe, and so V, depends on the chosen orientation.
    """
    diagram = as_diagram(p)
    result = trace(build(diagram))
    if result.orientation_dependent:
        logger.debug("Jones polynomial of %s is orientation-dependent", diagram)
    w = result.writhe
    return monomial(-1 if w % 2 else 1, -3 * w) * kb_closed(diagram)


def _all_multiples_of_four(p: LaurentPoly) -> bool:
    return all(exp % 4 == 0 for exp, _ in p.terms())


def jones(p: DiagramLike) -> LaurentPoly:
    """
    Jones polynomial V.

    Returns:
        V in t when every A-exponent is a multiple of 4; otherwise V in A
        (always the case for knots, whose V has half-integral t-exponents)

    Example:
        >>> jones((0,)) == delta()
        True
    """
    value = jones_a(p)
    if _all_multiples_of_four(value):
        return to_t_poly(value)
    return value


def jones1(p: DiagramLike, integral: bool = True) -> LaurentPoly:
    """
    Unknot-normalized Jones polynomial V1 = V / delta.

    Args:
        p: Diagram or entry sequence
        integral: Require integral t-exponents (knots only)

    Returns:
        V1 in t; for links with integral=False, V1 in A when its exponents
        are not multiples of 4

    Raises:
        NotAKnotError: If p is a link and integral output was requested
        NonIntegralDegreeError: Propagated from the t-substitution
    """
    diagram = as_diagram(p)
    result = trace(build(diagram))
    if integral and result.component_count > 1:
        raise NotAKnotError(
            f"not a knot: {diagram} has {result.component_count} components"
        )
    w = result.writhe
    value = monomial(-1 if w % 2 else 1, -3 * w) * kb_closed(diagram)
    reduced_value = divide_exact(value, delta())
    if integral or _all_multiples_of_four(reduced_value):
        return to_t_poly(reduced_value)
    return reduced_value


def jones_span(p: DiagramLike) -> int:
    """
    Span of V, read off the bracket as span(<P>) / 4.

    Raises:
        SpanConsistencyError: If span(<P>) is not a multiple of 4
    """
    diagram = as_diagram(p)
    bracket_span = span(kb_closed(diagram))
    if bracket_span % 4:
        raise SpanConsistencyError(
            f"bracket span {bracket_span} of {diagram} is not a multiple of 4"
        )
    return bracket_span // 4

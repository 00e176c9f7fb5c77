"""
Kauffman brackets of pretzel diagrams.

Two independent computations live here: the closed product formula and the
entry-elimination recurrence. Both use the normalization <O> = delta.
"""

import logging
from functools import lru_cache
from typing import Tuple

from pretzelsmith.core.diagram import DiagramLike, as_diagram
from pretzelsmith.core.laurent import LaurentPoly, delta, monomial, one, zero

logger = logging.getLogger(__name__)

RECURSION_CACHE_SIZE = 1 << 16


@lru_cache(maxsize=512)
def qbracket(a: int) -> LaurentPoly:
    """
    The twist polynomial [a] attached to a column of a crossings.

    For a != 0 with sign s this is
    A^(-2s-3a) * sum_{i=1..|a|} (-1)^(a+i) A^(4is), and [0] = 0.

    Example:
        >>> str(qbracket(1)), str(qbracket(-1)), str(qbracket(2))
        ('A^-1', 'A', '-A^-4 + 1')
    """
    if a == 0:
        return zero()
    sign = 1 if a > 0 else -1
    base = -2 * sign - 3 * a
    terms = {}
    for i in range(1, abs(a) + 1):
        terms[base + 4 * i * sign] = -1 if (a + i) % 2 else 1
    return LaurentPoly.from_terms(terms)


def _kink(a: int) -> LaurentPoly:
    """(-A^-3)^a for any integer a."""
    return monomial(-1 if a % 2 else 1, -3 * a)


def qbracket_recursive(a: int) -> LaurentPoly:
    """
    [a] built step by step from [0] = 0.

    Uses [a] = A[a-1] + A^-1 (-A^-3)^(a-1) upward for a > 0 and
    [a] = A^-1 [a+1] + A (-A^3)^(-a-1) downward for a < 0.
    """
    value = zero()
    if a > 0:
        for k in range(1, a + 1):
            value = monomial(1, 1) * value + monomial(1, -1) * _kink(k - 1)
    else:
        for k in range(-1, a - 1, -1):
            # (-A^3)^(-k-1) equals (-A^-3)^(k+1)
            value = monomial(1, -1) * value + monomial(1, 1) * _kink(k + 1)
    return value


def kb_closed(p: DiagramLike) -> LaurentPoly:
    """
    Bracket from the closed product formula.

    <P(a1..an)> = prod(A^ai * delta + [ai]) + (delta^2 - 1) * prod([ai])

    Example:
        >>> kb_closed((0,)) == delta()
        True
    """
    d = delta()
    twisted = one()
    bare = one()
    for a in as_diagram(p).entries:
        twisted = twisted * (monomial(1, a) * d + qbracket(a))
        bare = bare * qbracket(a)
    return twisted + (d * d - 1) * bare


@lru_cache(maxsize=RECURSION_CACHE_SIZE)
def _kb_sorted(entries: Tuple[int, ...]) -> LaurentPoly:
    if not any(entries):
        return delta() ** len(entries)
    if len(entries) == 1:
        return delta() * _kink(entries[0])

    index = next(i for i, a in enumerate(entries) if a)
    a = entries[index]
    rest = entries[:index] + entries[index + 1 :]
    with_zero = tuple(sorted(rest + (0,)))
    return monomial(1, a) * _kb_sorted(with_zero) + qbracket(a) * _kb_sorted(rest)


def kb_recursive(p: DiagramLike) -> LaurentPoly:
    """
    Bracket from the entry-elimination recurrence.

    <P(.., a, ..)> = A^a <P(.., 0, ..)> + [a] <P(..)> removes one nonzero
    entry per step; a single column closes to delta (-A^-3)^a and an
    all-zero tuple of length n to delta^n. Results are memoized on the
    sorted entry tuple.
    """
    key = tuple(sorted(as_diagram(p).entries))
    return _kb_sorted(key)


def recursion_cache_info():
    """Hit and miss counters of the recurrence memo table."""
    return _kb_sorted.cache_info()

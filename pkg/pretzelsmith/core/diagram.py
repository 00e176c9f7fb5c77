"""
Pretzel diagram data model.

A pretzel diagram P(a1, ..., an) is an ordered tuple of signed crossing
counts, one per vertical twist column. This module derives the counting
parameters used throughout the span law, reduces diagrams by cancelling
(1, -1) pairs and absorbing +-1 entries into a 0 column, and picks a
canonical representative up to reordering and mirror image.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from pretzelsmith.core.validator import validate_entries


class PretzelDiagram:
    """
    Immutable pretzel diagram.

    Attributes:
        entries: Tuple of signed crossing counts, one per column

    Example:
        >>> p = PretzelDiagram([2, -3, -4])
        >>> str(p)
        '(2,-3,-4)'
        >>> p.crossing_count
        9
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        """
        Initialize a diagram.

        Args:
            entries: Signed crossing counts; at least one is required

        Raises:
            InvalidDiagramError: If entries is empty or holds non-integers
        """
        self._entries = validate_entries(entries)

    @property
    def entries(self) -> Tuple[int, ...]:
        """Signed crossing counts."""
        return self._entries

    @property
    def crossing_count(self) -> int:
        """Total number of crossings, the sum of |a_i|."""
        return sum(abs(a) for a in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> int:
        return self._entries[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PretzelDiagram):
            return self._entries == other._entries
        if isinstance(other, tuple):
            return self._entries == other
        return NotImplemented

    def __lt__(self, other: "PretzelDiagram") -> bool:
        return self._entries < other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"PretzelDiagram({self._entries})"

    def __str__(self) -> str:
        return format_entries(self._entries)


DiagramLike = Union[PretzelDiagram, Iterable[int]]


def as_diagram(value: DiagramLike) -> PretzelDiagram:
    """Accept either a diagram or a plain entry sequence."""
    if isinstance(value, PretzelDiagram):
        return value
    return PretzelDiagram(value)


def format_entries(entries: Iterable[int]) -> str:
    """Render entries as ``(a1,a2,...)``."""
    return "(" + ",".join(str(a) for a in entries) + ")"


@dataclass(frozen=True)
class DiagramParams:
    """
    Counting parameters of a pretzel diagram.

    Attributes:
        r: Number of entries greater than 1
        s: Number of entries less than -1
        z: Number of zero entries
        alpha: Number of entries equal to 1
        beta: Number of entries equal to -1
        lam: alpha - beta
        sigma: Sum of |a_i| over entries with |a_i| > 1
        M: Smallest |a_i| with |a_i| > 1, or None when r + s = 0
    """

    r: int
    s: int
    z: int
    alpha: int
    beta: int
    lam: int
    sigma: int
    M: Optional[int]

    def to_dict(self) -> Dict[str, Optional[int]]:
        """Parameter names as they are printed."""
        return {
            "r": self.r,
            "s": self.s,
            "z": self.z,
            "alpha": self.alpha,
            "beta": self.beta,
            "lambda": self.lam,
            "Sigma": self.sigma,
            "M": self.M,
        }


def params(p: DiagramLike) -> DiagramParams:
    """
    Count the parameters r, s, z, alpha, beta, lambda, Sigma and M.

    Example:
        >>> params((2, -3, -4)).sigma
        9
    """
    entries = as_diagram(p).entries
    big = [abs(a) for a in entries if abs(a) > 1]
    alpha = sum(1 for a in entries if a == 1)
    beta = sum(1 for a in entries if a == -1)
    return DiagramParams(
        r=sum(1 for a in entries if a > 1),
        s=sum(1 for a in entries if a < -1),
        z=sum(1 for a in entries if a == 0),
        alpha=alpha,
        beta=beta,
        lam=alpha - beta,
        sigma=sum(big),
        M=min(big) if big else None,
    )


def _is_split_unlink(entries: Tuple[int, ...]) -> bool:
    return len(entries) == 2 and sorted(entries) == [-1, 1]


def is_reduced(p: DiagramLike) -> bool:
    """
    True when no +1 and -1 entries coexist and no +-1 entry sits beside a 0.

    P(1, -1) is reduced by definition.
    """
    entries = as_diagram(p).entries
    if _is_split_unlink(entries):
        return True
    alpha = entries.count(1)
    beta = entries.count(-1)
    if alpha and beta:
        return False
    return not (0 in entries and (alpha or beta))


def reduce(p: DiagramLike) -> PretzelDiagram:
    """
    Cancel (1, -1) pairs and absorb +-1 entries into a 0 column until reduced.

    Entry order of the surviving columns is preserved.

    Example:
        >>> reduce((1, -1, 5))
        PretzelDiagram((5,))
        >>> reduce((0, 1, 1, -3))
        PretzelDiagram((0, -3))
    """
    entries = list(as_diagram(p).entries)
    while not is_reduced(entries):
        if 1 in entries and -1 in entries:
            entries.remove(1)
            entries.remove(-1)
        else:
            entries = [a for a in entries if a not in (1, -1)]
    if not entries:
        entries = [0]
    return PretzelDiagram(entries)


def sort_desc(p: DiagramLike) -> PretzelDiagram:
    """Entries in non-increasing order."""
    return PretzelDiagram(sorted(as_diagram(p).entries, reverse=True))


def mirror(p: DiagramLike) -> PretzelDiagram:
    """Negate every entry."""
    return PretzelDiagram(-a for a in as_diagram(p).entries)


def canonical(p: DiagramLike) -> PretzelDiagram:
    """
    Lexicographically greater of sort_desc(P) and sort_desc(mirror(P)).

    Example:
        >>> canonical((-3, 0, -3, -3))
        PretzelDiagram((3, 3, 3, 0))
    """
    diagram = as_diagram(p)
    return max(sort_desc(diagram), sort_desc(mirror(diagram)))


def count_even(p: DiagramLike) -> int:
    """Number of even entries, 0 included."""
    return sum(1 for a in as_diagram(p).entries if a % 2 == 0)


def is_knot(p: DiagramLike) -> bool:
    """
    True when the diagram closes to a single component.

    That happens for exactly one even entry, or for no even entry with an
    odd number of columns.
    """
    diagram = as_diagram(p)
    evens = count_even(diagram)
    return evens == 1 or (evens == 0 and len(diagram) % 2 == 1)


def absorb_one_minus_two(p: DiagramLike) -> Optional[PretzelDiagram]:
    """
    Rewrite P(1, -2, a3, ...) as the isotopic P(2, a3, ...).

    Returns:
        The rewritten diagram, or None when P has no (1, -2) pair
    """
    entries = list(as_diagram(p).entries)
    if len(entries) < 2 or 1 not in entries or -2 not in entries:
        return None
    entries.remove(1)
    entries[entries.index(-2)] = 2
    return PretzelDiagram(entries)

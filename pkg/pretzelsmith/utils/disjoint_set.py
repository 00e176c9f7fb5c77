"""
Union-find over hashable items with path compression and union by rank.
"""

from typing import Dict, Hashable, Iterable, List


class DisjointSet:
    """
    Partition of a set of hashable items into disjoint classes.

    Example:
        >>> ds = DisjointSet(["a", "b", "c"])
        >>> ds.merge("a", "b")
        True
        >>> ds.class_count()
        2
    """

    def __init__(self, items: Iterable[Hashable] = ()):
        self._parent: Dict[Hashable, Hashable] = {}
        self._rank: Dict[Hashable, int] = {}
        for item in items:
            self.add(item)

    def add(self, item: Hashable) -> bool:
        """Insert a singleton class; returns False if already present."""
        if item in self._parent:
            return False
        self._parent[item] = item
        self._rank[item] = 1
        return True

    def root(self, item: Hashable) -> Hashable:
        """Representative of the class holding ``item``."""
        path: List[Hashable] = []
        while self._parent[item] != item:
            path.append(item)
            item = self._parent[item]
        for node in path:
            self._parent[node] = item
        return item

    def merge(self, x: Hashable, y: Hashable) -> bool:
        """Join the classes of x and y; returns False if already joined."""
        root_x, root_y = self.root(x), self.root(y)
        if root_x == root_y:
            return False
        if self._rank[root_x] < self._rank[root_y]:
            root_x, root_y = root_y, root_x
        self._parent[root_y] = root_x
        if self._rank[root_x] == self._rank[root_y]:
            self._rank[root_x] += 1
        return True

    def class_count(self) -> int:
        """Number of disjoint classes."""
        return sum(1 for item, parent in self._parent.items() if item == parent)

    def __len__(self) -> int:
        return len(self._parent)

    def __contains__(self, item: object) -> bool:
        return item in self._parent

"""
Utility helpers for PretzelSmith.

This package contains the union-find structure used when building planar diagrams, the
process-pool helper used by the census, and output rendering.
"""

from pretzelsmith.utils.disjoint_set import DisjointSet
from pretzelsmith.utils.parallel import default_jobs, map_batches, strided_batches

__all__ = [
    "DisjointSet",
    "default_jobs",
    "map_batches",
    "strided_batches",
]

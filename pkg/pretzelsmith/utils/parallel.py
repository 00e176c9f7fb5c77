"""
Process-pool helper for splitting independent work into batches.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    """Worker count used when none is given: the number of CPUs."""
    return os.cpu_count() or 1


def strided_batches(items: Sequence[T], jobs: int) -> List[List[T]]:
    """
    Split items into ``jobs`` interleaved batches.

    Example:
        >>> strided_batches([1, 2, 3, 4, 5], 2)
        [[1, 3, 5], [2, 4]]
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    return [list(items[i::jobs]) for i in range(jobs) if items[i::jobs]]


def map_batches(
    func: Callable[[List[T]], R], items: Sequence[T], jobs: Optional[int]
) -> List[R]:
    """
    Apply ``func`` to interleaved batches of ``items``.

    With ``jobs`` None, 1 or fewer than two items everything runs in the
    calling process as a single batch. Results come back in batch order.
    ``func`` must be picklable (a module-level function).
    """
    if jobs is None or jobs <= 1 or len(items) < 2:
        return [func(list(items))]
    batches = strided_batches(items, jobs)
    logger.debug("Running %d batches on %d workers", len(batches), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, batches))

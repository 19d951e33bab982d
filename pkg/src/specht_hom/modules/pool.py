"""Running independent work items on a process pool.

Implements:
- `default_workers`: The number of physical cores, at least 1.
- `run_in_pool`: Map a picklable function over items, results in input order.
"""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import TypeVar

import psutil

pool_logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    """Physical core count from psutil, falling back to 1."""
    return psutil.cpu_count(logical=False) or 1


def run_in_pool(func: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """[func(item) for item in items], spread over `workers` processes.

    One worker (or at most one item) runs everything in this process.

    Raises:
        ValueError: If `workers` is not positive.
    """
    if workers < 1:
        raise ValueError(f"Need at least one worker, got {workers}")
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]
    results: dict[int, R] = {}
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as executor:
        futures = {executor.submit(func, item): k for k, item in enumerate(items)}
        for future in as_completed(futures):
            k = futures[future]
            results[k] = future.result()
            pool_logger.debug("Item %d of %d done", k + 1, len(items))
    return [results[k] for k in range(len(items))]

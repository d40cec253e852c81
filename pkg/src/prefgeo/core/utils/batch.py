"""Batch execution utilities for data-parallel work.

batch_execute maps a picklable function over a list of items, either
in-process (workers == 1) or in a process pool. A worker count of 0 or None
means one process per physical core, as reported by psutil.

Usage:
    results = batch_execute(rank_chunk, chunks, workers=4)
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, TypeVar

import psutil

T = TypeVar("T")


def resolve_workers(workers: int | None) -> int:
    """Turn a configured worker count into a positive process count."""
    if workers is None or workers <= 0:
        workers = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
        logging.debug(f"worker count from psutil: {workers}")
    return workers


def chunked(items: list[T], n: int) -> list[list[T]]:
    """Split items into at most n contiguous, nearly equal chunks."""
    if not items:
        return []
    n = max(1, min(n, len(items)))
    size, extra = divmod(len(items), n)
    out, start = [], 0
    for i in range(n):
        end = start + size + (1 if i < extra else 0)
        out.append(items[start:end])
        start = end
    return out


def batch_execute(
    func: Callable[[T], Any],
    items: Iterable[T],
    workers: int | None = 1,
) -> list[Any]:
    """Apply func to every item, preserving order.

    Args:
        func: A module-level (picklable) callable.
        items: Inputs.
        workers: Process count; 1 runs in-process, 0/None asks psutil.

    Returns:
        list: func(item) for each item, in input order.
    """
    items = list(items)
    workers = resolve_workers(workers)
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]

    logging.info(f"Executing batch of {len(items)} items on {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))

"""Ordered parallel map over independent parameter points."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    env = os.environ.get("ZEROGEOM_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = 1) -> list[R]:
    """``[fn(x) for x in items]``, fanned out over ``jobs`` processes; order is preserved."""
    items = list(items)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as ex:
        return list(ex.map(fn, items))

"""Order-preserving parallel map over worker processes."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def resolve_threads(threads: int | None = None) -> int:
    env = os.environ.get("WREG_THREADS")
    if env:
        return max(1, int(env))
    if threads is None:
        return os.cpu_count() or 1
    return max(1, int(threads))


def pmap(fn, items, threads: int = 1) -> list:
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))

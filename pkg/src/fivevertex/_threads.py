"""Optional thread-pool mapping, capped by the BETHE_GROTH_THREADS env var."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("BETHE_GROTH_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """map() that fans out over threads when BETHE_GROTH_THREADS > 1."""
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))

"""Tiny worker-pool helper.

Results always come back in input order, so parallel and sequential runs
produce identical artifacts.  Work items and the callable must be
picklable when jobs > 1.
"""

from __future__ import annotations

import multiprocessing
import os


def default_jobs() -> int:
    return os.cpu_count() or 1


def parallel_map(fn, items, jobs: int = 1) -> list:
    items = list(items)
    if jobs is None:
        jobs = default_jobs()
    if jobs <= 1 or len(items) < 4:
        return [fn(item) for item in items]
    with multiprocessing.Pool(processes=min(jobs, len(items))) as pool:
        return pool.map(fn, items)

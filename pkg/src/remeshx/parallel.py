"""Worker-pool configuration and chunked execution for the data-parallel steps.

The worker count is resolved in this order: explicit API override via
:func:`set_num_workers`, the ``REMESHX_THREADS`` environment variable, then
all available cores.  Chunk boundaries depend only on the input length and
the worker count, and every chunk writes a disjoint slice of the output, so
results are bit-identical no matter how many workers run.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

_override: int | None = None

# below this many items the pool overhead outweighs any possible gain
_MIN_PARALLEL = 1 << 17


def set_num_workers(count: int | None) -> None:
    """Override the worker count for this process (0 or None = auto)."""
    global _override
    _override = int(count) if count else None


def num_workers() -> int:
    """Effective worker count (API override > REMESHX_THREADS > all cores)."""
    if _override is not None:
        return _override
    env = os.environ.get("REMESHX_THREADS", "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value > 0:
            return value
    return os.cpu_count() or 1


def for_each_chunk(n: int, body: Callable[[int, int], None]) -> None:
    """Run ``body(lo, hi)`` over a fixed partition of ``range(n)``.

    Small inputs run inline; large ones are split into one chunk per worker
    and executed on a thread pool (the numpy kernels inside release the GIL).
    """
    if n <= 0:
        return
    workers = num_workers()
    if workers <= 1 or n < _MIN_PARALLEL:
        body(0, n)
        return
    step = -(-n // workers)
    bounds = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
    with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
        futures = [pool.submit(body, lo, hi) for lo, hi in bounds]
        for future in futures:
            future.result()

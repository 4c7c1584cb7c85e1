"""
Order-preserving map over campaign work items.

Items are processed in windows; results come back in submission order, so a
report built from them does not depend on `jobs`.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

WINDOW_PER_JOB = 16


def run_parallel(
    func: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
    time_limit: Optional[float] = None,
    desc: str = "items",
    progress: bool = True,
) -> tuple[list[R], bool]:
    """
    Apply `func` to every item, `jobs` processes at a time.

    `func` must be a module-level function. Returns (results, complete);
    complete is False when `time_limit` seconds passed before every window
    was submitted, in which case results cover a prefix of `items`.
    """
    items = list(items)
    window = max(1, jobs) * WINDOW_PER_JOB
    started = time.monotonic()
    results: list[R] = []
    bar = tqdm(total=len(items), desc=desc, disable=not progress, leave=False)

    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for start in range(0, len(items), window):
            if time_limit is not None and time.monotonic() - started > time_limit:
                logger.warning(
                    "Time limit of %.1fs reached after %d of %d %s",
                    time_limit, len(results), len(items), desc,
                )
                return results, False
            chunk = items[start:start + window]
            if executor is None:
                done = [func(item) for item in chunk]
            else:
                done = list(executor.map(func, chunk))
            results.extend(done)
            bar.update(len(done))
    finally:
        bar.close()
        if executor is not None:
            executor.shutdown()
    return results, True

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

from config.settings import settings

from .utils.logger import setup_logger

logger = setup_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(max_workers: Optional[int]) -> int:
    if max_workers is None:
        max_workers = settings.max_workers
    return max(1, int(max_workers))


def parallel_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    max_workers: Optional[int] = None,
) -> List[R]:
    """Apply ``fn`` to every item on a thread pool.

    Results come back in input order whatever the completion order, so callers
    can merge them deterministically. The first exception raised by a task is
    re-raised after the pool shuts down.
    """
    work: Sequence[T] = list(items)
    if not work:
        return []

    workers = min(resolve_workers(max_workers), len(work))
    if workers == 1:
        return [fn(item) for item in work]

    results: Dict[int, R] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_map = {executor.submit(fn, item): index for index, item in enumerate(work)}
        for future in as_completed(future_map):
            index = future_map[future]
            results[index] = future.result()

    logger.debug("parallel_map finished %s tasks on %s workers", len(work), workers)
    return [results[index] for index in range(len(work))]

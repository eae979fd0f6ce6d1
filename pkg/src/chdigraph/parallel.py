"""Order-preserving parallel map over worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def pmap(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    """``list(map(fn, items))``, spread over ``threads`` processes when > 1.

    Results come back in input order, so output never depends on the
    worker count. ``fn`` must be picklable (a module-level function).
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))

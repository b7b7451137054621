"""Order-preserving process pool helpers."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_THREADS = "CHI_THREADS"


def default_workers() -> int:
    env = os.environ.get(ENV_THREADS)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{ENV_THREADS} must be a positive integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"{ENV_THREADS} must be a positive integer, got {env!r}")
        return value
    return os.cpu_count() or 1


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int, chunksize: int = 64) -> Iterator[R]:
    """``map(fn, items)`` spread over ``workers`` processes; results keep input order."""
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=chunksize)

"""Ordered process-pool map."""

from __future__ import annotations

import multiprocessing
from collections.abc import Callable, Iterable, Iterator
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> Iterator[R]:
    """Map ``func`` over ``items`` keeping input order.

    With ``workers == 1`` everything runs in-process, which keeps tests and
    small runs free of pool start-up cost. ``func`` must be a module-level
    function so it can be pickled.
    """
    if workers <= 1:
        for item in items:
            yield func(item)
        return

    with multiprocessing.Pool(processes=workers) as pool:
        yield from pool.imap(func, items)

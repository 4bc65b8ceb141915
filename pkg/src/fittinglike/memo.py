"""Per-group memoisation of expensive derived subgroups.

Results are keyed by ``(name, group, extra args)``.  Group equality is
set equality of elements and equal groups share an element indexing, so a
cached :class:`~fittinglike.group.Subgroup` stays valid for any equal group.
The active cache is owned by the caller: swap it with :func:`memo_scope`.
"""

from __future__ import annotations

import contextlib
import functools
import threading
from typing import Any, Callable, Hashable, Iterator, TypeVar

F = TypeVar("F", bound=Callable[..., Any])


class MemoCache:
    def __init__(self):
        self._data: dict[Hashable, Any] = {}
        self._lock = threading.Lock()

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = compute()
        with self._lock:
            # first writer wins so every caller sees one object
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


_state = threading.local()
_global = MemoCache()


def current_cache() -> MemoCache:
    return getattr(_state, "cache", _global)


@contextlib.contextmanager
def memo_scope(cache: MemoCache | None = None) -> Iterator[MemoCache]:
    cache = MemoCache() if cache is None else cache
    old = getattr(_state, "cache", None)
    _state.cache = cache
    try:
        yield cache
    finally:
        if old is None:
            del _state.cache
        else:
            _state.cache = old


def memoized(name: str) -> Callable[[F], F]:
    def deco(fn: F) -> F:
        @functools.wraps(fn)
        def wrapper(g, *args):
            key = (name, g, *args)
            return current_cache().get_or_compute(key, lambda: fn(g, *args))
        return wrapper  # type: ignore[return-value]
    return deco

"""Resource caps and the exceptions raised when they are hit."""

from __future__ import annotations

import contextlib
import dataclasses
import os
import threading
from typing import Iterator

ENV_PREFIX = "FITTINGLIKE_"


class GroupError(Exception):
    """Base class for errors raised by this package."""


class CapExceeded(GroupError):
    """A configured size cap would be exceeded."""


class EnumerationTooLarge(CapExceeded):
    pass


class SubgroupEnumerationCap(CapExceeded):
    pass


class DegreeTooLarge(CapExceeded):
    pass


class NotNormalError(GroupError):
    pass


class StalledSeriesError(GroupError):
    pass


@dataclasses.dataclass(frozen=True)
class Caps:
    """Desk-scale limits.

    ``max_order`` bounds subgroup enumeration, ``max_elements`` bounds plain
    element enumeration and ``max_degree`` bounds both the degree of coset
    action quotients and the order of any group that gets a Cayley table
    (the regular quotient by the trivial subgroup has degree equal to the
    order, so the two limits are the same quantity).
    """

    max_order: int = 200
    max_elements: int = 10**6
    max_degree: int = 5000

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> Caps:
        env = os.environ if environ is None else environ
        kw = {}
        for field in dataclasses.fields(cls):
            raw = env.get(ENV_PREFIX + field.name.upper())
            if raw is not None:
                kw[field.name] = int(raw)
        return cls(**kw)


_local = threading.local()
_default = Caps()


def get_caps() -> Caps:
    return getattr(_local, "caps", _default)


def set_default_caps(caps: Caps) -> None:
    global _default
    _default = caps


@contextlib.contextmanager
def using_caps(caps: Caps | None = None, **overrides: int) -> Iterator[Caps]:
    """Temporarily replace the caps seen by the current thread."""
    base = caps if caps is not None else get_caps()
    new = dataclasses.replace(base, **overrides)
    old = getattr(_local, "caps", None)
    _local.caps = new
    try:
        yield new
    finally:
        if old is None:
            del _local.caps
        else:
            _local.caps = old

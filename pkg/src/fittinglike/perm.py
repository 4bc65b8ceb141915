"""Permutations of {1..n} with a left-to-right action.

Points are 1-based at the public surface and 0-based internally: a
permutation stores the tuple of images of 0..n-1.  Products act left to
right, ``point^(p*q) = (point^p)^q``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .config import GroupError

Array = tuple[int, ...]


def mul(a: Array, b: Array) -> Array:
    return tuple(b[x] for x in a)


def inv(a: Array) -> Array:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def is_identity(a: Array) -> bool:
    return all(i == x for i, x in enumerate(a))


class Permutation:
    __slots__ = ("array",)

    def __init__(self, array: Sequence[int]):
        arr = tuple(array)
        if sorted(arr) != list(range(len(arr))):
            raise GroupError(f"not a permutation of 0..{len(arr) - 1}: {arr}")
        self.array = arr

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-based images, ``images[i-1]`` being the image of i."""
        return cls([x - 1 for x in images])

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]] | str, degree: int | None = None) -> Permutation:
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        cycles = [tuple(c) for c in cycles]
        top = max((max(c) for c in cycles if c), default=0)
        n = top if degree is None else degree
        if n < top:
            raise GroupError(f"point {top} exceeds degree {n}")
        img = list(range(n))
        seen: set[int] = set()
        for c in cycles:
            for x in c:
                if x < 1:
                    raise GroupError(f"points are 1-based, got {x}")
                if x in seen:
                    raise GroupError(f"point {x} repeated")
                seen.add(x)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.array)

    @property
    def images(self) -> Array:
        return tuple(x + 1 for x in self.array)

    def __call__(self, point: int) -> int:
        return self.array[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return invert(self)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else invert(self)
        k = abs(k)
        out = Permutation.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.array == other.array

    def __lt__(self, other: Permutation) -> bool:
        return self.array < other.array

    def __hash__(self) -> int:
        return hash(self.array)

    def is_identity(self) -> bool:
        return is_identity(self.array)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.array[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.array[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.array[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    if p.degree != q.degree:
        raise GroupError(f"degree mismatch: {p.degree} != {q.degree}")
    out = Permutation.__new__(Permutation)
    out.array = mul(p.array, q.array)
    return out


def invert(p: Permutation) -> Permutation:
    out = Permutation.__new__(Permutation)
    out.array = inv(p.array)
    return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``"(1 2 3)(4 5)"`` into cycles; commas may separate points."""
    stripped = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise GroupError(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = tuple(int(x) for x in body)
        except ValueError:
            raise GroupError(f"malformed cycle ({m.group(1)}) in {text!r}") from None
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point in cycle ({m.group(1)})")
        if any(x < 1 for x in pts):
            raise GroupError(f"points are 1-based, got ({m.group(1)})")
        if len(pts) > 1:
            cycles.append(pts)
    if stripped[pos:].strip():
        raise GroupError(f"unexpected text {stripped[pos:]!r} in {text!r}")
    if not stripped:
        raise GroupError("empty permutation text")
    return cycles

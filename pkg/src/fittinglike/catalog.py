"""A curated catalog of small permutation groups.

Each entry records how the group is built and the order it must have; the
order is asserted when the entry is loaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from importlib import resources
from pathlib import Path
from typing import Union

from .config import GroupError
from .group import Group, direct_product
from .perm import Permutation


# --- constructions ------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int

    def build(self) -> Group:
        return Group([Permutation.from_images([*range(2, self.n + 1), 1])], self.n)

    def describe(self) -> str:
        return f"Cyclic({self.n})"


@dataclass(frozen=True)
class Dihedral:
    """Symmetries of a ``order/2``-gon; ``order`` is the group order."""

    order: int

    def build(self) -> Group:
        n = self.order // 2
        rot = Permutation.from_images([*range(2, n + 1), 1])
        ref = Permutation.from_images([1, *range(n, 1, -1)])
        return Group([rot, ref], n)

    def describe(self) -> str:
        return f"Dihedral({self.order})"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def build(self) -> Group:
        if self.n == 1:
            return Group([], 1)
        gens = [Permutation.from_images([*range(2, self.n + 1), 1]), Permutation.from_cycles([[1, 2]], self.n)]
        return Group(gens, self.n)

    def describe(self) -> str:
        return f"Symmetric({self.n})"


@dataclass(frozen=True)
class Alternating:
    n: int

    def build(self) -> Group:
        gens = [Permutation.from_cycles([[1, 2, i]], self.n) for i in range(3, self.n + 1)]
        return Group(gens, self.n)

    def describe(self) -> str:
        return f"Alternating({self.n})"


@dataclass(frozen=True)
class Quaternion8:
    def build(self) -> Group:
        return Group([Permutation.from_cycles("(1 2 4 7)(3 6 8 5)", 8),
                      Permutation.from_cycles("(1 3 4 8)(2 5 7 6)", 8)], 8)

    def describe(self) -> str:
        return "Quaternion8"


@dataclass(frozen=True)
class SL23:
    """SL(2,3) as the quaternion group extended by an element of order 3."""

    def build(self) -> Group:
        q = Quaternion8().build()
        return Group([*q.generators, Permutation.from_cycles("(2 3 5)(6 7 8)", 8)], 8)

    def describe(self) -> str:
        return "SL23"


@dataclass(frozen=True)
class DirectProductOf:
    entries: tuple[Construction, ...]

    def build(self) -> Group:
        return direct_product(*(e.build() for e in self.entries)).group

    def factors(self) -> list[Group]:
        return [e.build() for e in self.entries]

    def describe(self) -> str:
        return "DirectProduct(" + ", ".join(e.describe() for e in self.entries) + ")"


@dataclass(frozen=True)
class WreathSmall:
    """``base`` wr ``top``: copies of ``base`` on blocks permuted by ``top``."""

    base: Construction
    top: Construction

    def build(self) -> Group:
        b, t = self.base.build(), self.top.build()
        m, k = b.degree, t.degree
        gens = []
        for p in b.generators:
            gens.append(Permutation([*p.array, *range(m, m * k)]))
        for p in t.generators:
            gens.append(Permutation([p.array[i // m] * m + i % m for i in range(m * k)]))
        return Group(gens, m * k)

    def describe(self) -> str:
        return f"Wreath({self.base.describe()}, {self.top.describe()})"


@dataclass(frozen=True)
class File:
    """A ``.grp`` file; a bare name is looked up among the bundled files."""

    path: str

    def build(self) -> Group:
        from .parsing import parse_group_file
        p = Path(self.path)
        if p.exists():
            text = p.read_text(encoding="utf-8")
        else:
            text = resources.files("fittinglike").joinpath("data", self.path).read_text(encoding="utf-8")
        return parse_group_file(text)

    def describe(self) -> str:
        return f"File({self.path})"


Construction = Union[Cyclic, Dihedral, Symmetric, Alternating, Quaternion8, SL23, DirectProductOf, WreathSmall, File]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    construction: Construction
    order: int

    def load(self) -> Group:
        g = self.construction.build()
        if g.order != self.order:
            raise GroupError(f"catalog entry {self.name} has order {g.order}, expected {self.order}")
        return g

    @property
    def factors(self) -> list[Group] | None:
        """Direct factors, for entries built as direct products."""
        c = self.construction
        return c.factors() if isinstance(c, DirectProductOf) else None


def _dp(*entries: Construction) -> DirectProductOf:
    return DirectProductOf(tuple(entries))


def _order(c: Construction) -> int:
    from math import factorial
    if isinstance(c, Cyclic):
        return c.n
    if isinstance(c, Dihedral):
        return c.order
    if isinstance(c, Symmetric):
        return factorial(c.n)
    if isinstance(c, Alternating):
        return factorial(c.n) // 2
    if isinstance(c, Quaternion8):
        return 8
    if isinstance(c, SL23):
        return 24
    if isinstance(c, DirectProductOf):
        return reduce(lambda a, e: a * _order(e), c.entries, 1)
    if isinstance(c, WreathSmall):
        deg = c.top.build().degree
        return _order(c.base) ** deg * _order(c.top)
    raise GroupError(f"no order formula for {c!r}")


C = Cyclic
_SPECS: list[tuple[str, Construction, int | None]] = [
    ("C1", C(1), None), ("C2", C(2), None), ("C3", C(3), None), ("C4", C(4), None),
    ("C5", C(5), None), ("C6", C(6), None), ("C8", C(8), None), ("C9", C(9), None),
    ("C12", C(12), None), ("C16", C(16), None), ("C64", C(64), None),
    ("C2xC2", _dp(C(2), C(2)), None), ("C2xC4", _dp(C(2), C(4)), None),
    ("C3xC3", _dp(C(3), C(3)), None), ("C2xC2xC2", _dp(C(2), C(2), C(2)), None),
    ("C2xC6", _dp(C(2), C(6)), None), ("C4xC4", _dp(C(4), C(4)), None),
    ("C8xC8", _dp(C(8), C(8)), None),
    ("D8", Dihedral(8), None), ("D10", Dihedral(10), None), ("D12", Dihedral(12), None),
    ("D16", Dihedral(16), None), ("Q8", Quaternion8(), None), ("SL(2,3)", SL23(), None),
    ("S3", Symmetric(3), None), ("S4", Symmetric(4), None), ("S5", Symmetric(5), None),
    ("S6", Symmetric(6), None), ("A4", Alternating(4), None), ("A5", Alternating(5), None),
    ("A6", Alternating(6), None),
    ("S3xC2", _dp(Symmetric(3), C(2)), None), ("S3xC3", _dp(Symmetric(3), C(3)), None),
    ("S3xS3", _dp(Symmetric(3), Symmetric(3)), None), ("A4xC2", _dp(Alternating(4), C(2)), None),
    ("A4xC3", _dp(Alternating(4), C(3)), None), ("S4xC2", _dp(Symmetric(4), C(2)), None),
    ("D8xC3", _dp(Dihedral(8), C(3)), None), ("Q8xC3", _dp(Quaternion8(), C(3)), None),
    ("C2xA5", _dp(C(2), Alternating(5)), None), ("S3xA5", _dp(Symmetric(3), Alternating(5)), None),
    ("C2wrC2", WreathSmall(C(2), C(2)), None), ("C3wrC2", WreathSmall(C(3), C(2)), None),
    ("C2wrC3", WreathSmall(C(2), C(3)), None), ("C2wrS3", WreathSmall(C(2), Symmetric(3)), None),
    ("C4wrC2", WreathSmall(C(4), C(2)), None),
    ("Heisenberg27", File("heisenberg27.grp"), 27),
]

CATALOG: tuple[CatalogEntry, ...] = tuple(
    CatalogEntry(name, c, order if order is not None else _order(c)) for name, c, order in _SPECS)


def get_entry(name: str) -> CatalogEntry:
    for e in CATALOG:
        if e.name.lower() == name.lower():
            return e
    raise GroupError(f"no catalog entry named {name!r}")

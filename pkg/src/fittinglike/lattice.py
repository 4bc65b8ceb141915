"""Subgroup lattices, Frattini subgroup, normal subgroups and chief series."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .config import EnumerationTooLarge, GroupError, SubgroupEnumerationCap, get_caps
from .group import (
    Group,
    Subgroup,
    generate,
    intersect,
    is_normal,
    join,
    join_all,
    meet_all,
    quotient,
    subgroup_from_bits,
)
from .memo import memoized


@dataclass(frozen=True)
class Section:
    """The factor ``top/bottom``; ``chief`` marks a chief factor of the ambient group."""

    top: Subgroup
    bottom: Subgroup
    chief: bool = False

    def __post_init__(self):
        if not self.bottom <= self.top or not is_normal(self.bottom, self.top):
            raise GroupError("section bottom must be normal in top")

    @property
    def order(self) -> int:
        return self.top.order // self.bottom.order


@dataclass
class NormalLattice:
    group: Group
    members: list[Subgroup]
    inclusion: np.ndarray = field(repr=False)

    def __post_init__(self):
        masks = {m.mask for m in self.members}
        whole = self.group.whole()
        if 1 not in masks or whole.mask not in masks:
            raise GroupError("normal lattice must contain 1 and the whole group")
        for a in self.members:
            if not is_normal(a):
                raise GroupError("non-normal member in normal lattice")
            for b in self.members:
                if (a.mask & b.mask) not in masks or join(a, b).mask not in masks:
                    raise GroupError("normal lattice not closed under meet and join")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def above(self, k: Subgroup) -> list[Subgroup]:
        return [m for m in self.members if k <= m]


def _cyclic_subgroups(g: Group) -> dict[int, int]:
    """Map mask -> one generating element index, for every cyclic subgroup."""
    t = g.table.mul
    out: dict[int, int] = {}
    seen = np.zeros(g.order, dtype=bool)
    for x in range(g.order):
        if seen[x]:
            continue
        powers = [0]
        y = x
        while y != 0:
            powers.append(y)
            y = int(t[y, x])
        bits = np.zeros(g.order, dtype=bool)
        bits[powers] = True
        m = subgroup_from_bits(g, bits).mask
        if m not in out:
            out[m] = x
        # generators of the same cyclic subgroup give the same subgroup
        seen[x] = True
    return out


@memoized("all_subgroups")
def all_subgroups(g: Group) -> list[Subgroup]:
    """Every subgroup once, sorted by order then by mask.

    Seeds with the cyclic subgroups and closes under joining with them.
    """
    cap = get_caps().max_order
    if g.order > cap:
        raise SubgroupEnumerationCap(
            f"subgroup enumeration needs order <= {cap} (got {g.order}); "
            "use the normal-lattice and chief-series based operations instead")
    cyclic = _cyclic_subgroups(g)
    found: dict[int, Subgroup] = {}
    queue: list[Subgroup] = []
    for m, x in cyclic.items():
        s = Subgroup(g, m, [x] if x else [])
        found[m] = s
        queue.append(s)
    cyc_items = sorted(cyclic.items(), key=lambda kv: kv[0].bit_count())
    for h in queue:
        hidx = None
        for m, x in cyc_items:
            if h.mask & m == m:
                continue
            if hidx is None:
                hidx = h.indices
            bits = generate(g, [x], hidx, h.gens)
            j = subgroup_from_bits(g, bits)
            if j.mask not in found:
                j._gens = (*h.gens, x)
                found[j.mask] = j
                queue.append(j)
    return sorted(found.values(), key=lambda s: (s.order, s.mask))


def smallest_containing(subs: list[Subgroup], mask: int) -> Subgroup:
    """First subgroup in an order-sorted list containing ``mask``: the join."""
    for s in subs:
        if s.mask & mask == mask:
            return s
    raise GroupError("no subgroup contains the given set")


@memoized("maximal_subgroups")
def maximal_subgroups(g: Group) -> list[Subgroup]:
    subs = all_subgroups(g)
    proper = [s for s in subs if not s.is_whole()]
    out = []
    for i, s in enumerate(proper):
        if not any(s.mask & t.mask == s.mask and t.mask != s.mask for t in proper[i + 1:]):
            out.append(s)
    return out


@memoized("frattini")
def frattini(g: Group) -> Subgroup:
    """Intersection of all maximal subgroups (the whole group if trivial).

    The Frattini subgroup is nilpotent and normal, so it lies in the Fitting
    subgroup; when that is trivial no subgroup enumeration is needed.
    """
    from .radicals import fitting
    if g.order > 1 and fitting(g).is_trivial():
        return g.trivial()
    if g.order > get_caps().max_order:
        return frattini_by_complements(g)
    return meet_all(g, maximal_subgroups(g))


def complements(g: Group, n: Subgroup) -> list[Subgroup]:
    """Every complement of the normal subgroup ``n``.

    A complement maps isomorphically onto ``g/n``, so it is generated by one
    lift of each generator of ``g/n``; all ``|n|^k`` choices of lift are tried.
    """
    t = g.table.mul
    kept: list[int] = []
    for x in g.whole().gens:
        # skip generators already in <kept, n>
        if not generate(g, kept, sub=n.indices, sub_gens=n.gens)[x]:
            kept.append(x)
    tries = n.order ** len(kept)
    if tries > get_caps().max_elements:
        raise EnumerationTooLarge(f"enumeration too large: {tries} lifts to search for complements")
    want = g.order // n.order
    found: dict[int, Subgroup] = {}
    for shifts in itertools.product(n.indices, repeat=len(kept)):
        lifts = [int(t[x, y]) for x, y in zip(kept, shifts)]
        bits = generate(g, lifts)
        if bits.sum() == want:
            k = subgroup_from_bits(g, bits, lifts)
            found.setdefault(k.mask, k)
    return list(found.values())


@memoized("frattini_by_complements")
def frattini_by_complements(g: Group) -> Subgroup:
    """Frattini subgroup without listing all subgroups.

    Take an abelian minimal normal ``n``.  A maximal subgroup either contains
    ``n`` or meets it trivially, and every complement of ``n`` is maximal, so
    the value is the preimage of ``Phi(g/n)`` cut down by all complements.
    """
    from .radicals import fitting
    fit = fitting(g)
    if g.order == 1 or fit.is_trivial():
        return g.trivial()
    n = min((m for m in minimal_normal_subgroups(g) if m <= fit), key=_sorted_key)
    q = quotient(g, n)
    return meet_all(g, [q.preimage(frattini(q.target)), *complements(g, n)])


def conjugacy_classes(g: Group) -> list[np.ndarray]:
    t = g.table
    seen = np.zeros(g.order, dtype=bool)
    classes = []
    ar = np.arange(g.order)
    for x in range(g.order):
        if seen[x]:
            continue
        cls = np.unique(t.mul[t.mul[t.inv, x], ar])
        seen[cls] = True
        classes.append(cls)
    return classes


@memoized("normal_lattice")
def normal_lattice(g: Group) -> NormalLattice:
    """All normal subgroups: joins of normal closures of conjugacy classes."""
    closures: dict[int, Subgroup] = {}
    for cls in conjugacy_classes(g):
        gens = [int(c) for c in cls if c != 0]
        s = subgroup_from_bits(g, generate(g, gens))
        closures.setdefault(s.mask, s)
    found: dict[int, Subgroup] = {1: g.trivial()}
    found.update(closures)
    queue = list(found.values())
    atoms = list(closures.values())
    for a in queue:
        for c in atoms:
            if a.mask & c.mask == c.mask:
                continue
            j = join(a, c)
            if j.mask not in found:
                found[j.mask] = j
                queue.append(j)
    members = sorted(found.values(), key=lambda s: (s.order, s.mask))
    inclusion = np.array([[a.mask & b.mask == a.mask for b in members] for a in members])
    return NormalLattice(g, members, inclusion)


def minimal_normal_subgroups(g: Group) -> list[Subgroup]:
    members = [m for m in normal_lattice(g) if not m.is_trivial()]
    return [m for m in members if not any(o < m for o in members)]


def maximal_normal_subgroups(g: Group) -> list[Subgroup]:
    members = [m for m in normal_lattice(g) if not m.is_whole()]
    return [m for m in members if not any(m < o for o in members)]


@memoized("socle")
def socle(g: Group) -> Subgroup:
    return join_all(g, minimal_normal_subgroups(g))


def abelian_socle(g: Group) -> Subgroup:
    return join_all(g, (m for m in minimal_normal_subgroups(g) if m.group.is_abelian()))


@memoized("m_intersection")
def m_intersection(g: Group) -> Subgroup:
    """Intersection of the maximal normal subgroups; for the trivial group
    there are none and the value is taken to be the trivial group."""
    if g.order == 1:
        return g.trivial()
    return meet_all(g, maximal_normal_subgroups(g))


@dataclass
class ChiefSeries:
    group: Group
    terms: list[Subgroup]

    def __post_init__(self):
        lat = normal_lattice(self.group)
        if not self.terms[0].is_trivial() or not self.terms[-1].is_whole():
            raise GroupError("chief series must run from 1 to the group")
        for lo, hi in zip(self.terms, self.terms[1:]):
            if not lo < hi:
                raise GroupError("chief series terms must strictly increase")
            if any(lo < m < hi for m in lat):
                raise GroupError("chief series step is not a chief factor")

    def factors(self) -> list[Section]:
        return [Section(hi, lo, chief=True) for lo, hi in zip(self.terms, self.terms[1:])]

    def factor_orders(self) -> list[int]:
        return [hi.order // lo.order for lo, hi in zip(self.terms, self.terms[1:])]


def _sorted_key(s: Subgroup) -> tuple:
    return (s.order, tuple(s.indices))


def chief_series(g: Group, through: Subgroup | None = None,
                 pick: Literal["smallest", "largest"] = "smallest") -> ChiefSeries:
    """Bottom-up chief series.

    Each step takes a minimal normal subgroup of ``g/current``; these are the
    normal subgroups of ``g`` minimal among those strictly above ``current``,
    so they are read off the normal lattice of ``g`` directly.  The pick is
    the smallest order then lexicographically least element set (or the
    largest order, for an independent second series).  With ``through``
    (normal in ``g``) the series passes through it.
    """
    lat = normal_lattice(g)
    terms = [g.trivial()]
    while not terms[-1].is_whole():
        cur = terms[-1]
        cands = [m for m in lat if cur < m]
        if through is not None and cur < through:
            cands = [m for m in cands if m <= through]
        minimal = [m for m in cands if not any(cur < o < m for o in cands)]
        if pick == "smallest":
            nxt = min(minimal, key=_sorted_key)
        else:
            nxt = max(minimal, key=lambda s: (s.order, tuple(-i for i in s.indices)))
        terms.append(nxt)
    return ChiefSeries(g, terms)

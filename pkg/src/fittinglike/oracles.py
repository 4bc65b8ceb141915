"""Slow, independent reference computations used to cross-check the engine.

Nothing here touches stabilizer chains or Cayley tables; everything works
on raw image tuples so a bug in the fast paths cannot hide itself.
"""

from __future__ import annotations

from typing import Iterable

from .group import Group, Subgroup, join_all
from .lattice import all_subgroups, normal_lattice
from .perm import inv, mul


def naive_closure(generators: Iterable[tuple[int, ...]], degree: int) -> set[tuple[int, ...]]:
    """All products of the generators, by breadth-first search."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def naive_order(g: Group) -> int:
    return len(naive_closure((p.array for p in g.generators), g.degree))


def subnormal_by_chains(g: Group) -> dict[int, set[int]]:
    """For every subgroup mask ``h``, the masks of all subgroups reachable
    from ``h`` by a chain of normal inclusions ``h = H0 <| H1 <| ... <| Hk``.

    Normality is tested by conjugating element tuples directly.
    """
    subs = all_subgroups(g)
    elems = {s.mask: [p.array for p in s.elements()] for s in subs}
    sets = {s.mask: set(elems[s.mask]) for s in subs}

    def normal_in(m: int, big: int) -> bool:
        inner = sets[m]
        for x in elems[big]:
            xi = inv(x)
            for h in elems[m]:
                if mul(mul(xi, h), x) not in inner:
                    return False
        return True

    reach: dict[int, set[int]] = {}
    for s in subs:
        found = {s.mask}
        stack = [s.mask]
        while stack:
            m = stack.pop()
            for t in subs:
                if t.mask in found or t.mask & m != m:
                    continue
                if normal_in(m, t.mask):
                    found.add(t.mask)
                    stack.append(t.mask)
        reach[s.mask] = found
    return reach


def largest_normal_nilpotent(g: Group) -> Subgroup:
    """Join of the normal subgroups that are nilpotent, by lattice scan."""
    from .radicals import is_nilpotent
    return join_all(g, (n for n in normal_lattice(g) if is_nilpotent(n.group)))

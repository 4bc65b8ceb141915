"""Deterministic Schreier-Sims stabilizer chains."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .perm import Array, inv, is_identity, mul


def _first_moved(a: Array) -> int:
    for i, x in enumerate(a):
        if i != x:
            return i
    raise ValueError("identity has no moved point")


def _orbit_transversal(point: int, gens: Sequence[Array], degree: int) -> dict[int, Array]:
    ident = tuple(range(degree))
    trans = {point: ident}
    queue = [point]
    for beta in queue:
        u = trans[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in trans:
                trans[gamma] = mul(u, s)
                queue.append(gamma)
    return trans


@dataclass
class StabChain:
    """Base points, per-level strong generators and transversals.

    ``transversals[i][beta]`` maps ``base[i]`` to ``beta`` and fixes
    ``base[:i]``.
    """

    degree: int
    base: list[int] = field(default_factory=list)
    gens: list[list[Array]] = field(default_factory=list)
    transversals: list[dict[int, Array]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def sift(self, g: Array, start: int = 0) -> tuple[Array, int]:
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            u = self.transversals[level].get(beta)
            if u is None:
                return g, level
            g = mul(g, inv(u))
        return g, len(self.base)

    def contains(self, g: Array) -> bool:
        if len(g) != self.degree:
            return False
        residue, _ = self.sift(g)
        return is_identity(residue)

    def elements(self) -> Iterator[Array]:
        """Every element once, as ``u_k ... u_1`` over transversal choices."""
        ident = tuple(range(self.degree))

        def walk(level: int, prefix: Array) -> Iterator[Array]:
            if level < 0:
                yield prefix
                return
            for u in self.transversals[level].values():
                yield from walk(level - 1, mul(prefix, u))

        yield from walk(len(self.base) - 1, ident)


def schreier_sims(generators: Sequence[Array], degree: int) -> StabChain:
    """Build a stabilizer chain; base points are chosen as the smallest
    moved point of the first generator that fixes the current base."""
    strong = [g for g in dict.fromkeys(generators) if not is_identity(g)]
    chain = StabChain(degree)
    if not strong:
        return chain
    base = chain.base
    for s in strong:
        if all(s[b] == b for b in base):
            base.append(_first_moved(s))

    def level_gens(i: int) -> list[Array]:
        return [s for s in strong if all(s[b] == b for b in base[:i])]

    chain.gens = [level_gens(i) for i in range(len(base))]
    chain.transversals = [_orbit_transversal(base[i], chain.gens[i], degree) for i in range(len(base))]

    i = len(base) - 1
    while i >= 0:
        trans = chain.transversals[i]
        failed = None
        for beta, u in list(trans.items()):
            for s in chain.gens[i]:
                h = mul(mul(u, s), inv(trans[s[beta]]))
                if is_identity(h):
                    continue
                residue, j = chain.sift(h, i + 1)
                if j < len(base) or not is_identity(residue):
                    failed = (residue, j)
                    break
            if failed:
                break
        if failed is None:
            i -= 1
            continue
        residue, j = failed
        if j == len(base):
            base.append(_first_moved(residue))
            chain.gens.append([])
            chain.transversals.append({})
        strong.append(residue)
        for level in range(i + 1, j + 1):
            chain.gens[level].append(residue)
            chain.transversals[level] = _orbit_transversal(base[level], chain.gens[level], degree)
        i = j
    return chain

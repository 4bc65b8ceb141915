"""Fitting-type radicals, innerisers and the predicates behind them.

Every function here returns a normal subgroup of its argument and returns
the trivial subgroup on the trivial group.  Where a radical has several
characterisations, each one gets its own function so they can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .config import GroupError
from .group import (
    Group,
    Subgroup,
    centralizer,
    commutator_subgroup,
    is_normal,
    join,
    join_all,
    meet_all,
    quotient,
    subgroup_from_bits,
)
from .lattice import Section, abelian_socle, chief_series, frattini, normal_lattice, socle
from .memo import memoized
from .perm import Permutation


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_pi_number(n: int, pi: Iterable[int]) -> bool:
    return set(prime_factors(n)) <= set(pi)


@dataclass
class RadicalResult:
    group: Group
    name: str
    value: Subgroup
    witness: dict[str, Any] = field(default_factory=dict)


# --- p-cores and the Fitting subgroup ------------------------------------------

def o_pi(g: Group, pi: Iterable[int]) -> Subgroup:
    """Largest normal pi-subgroup; trivial for the empty prime set."""
    pi = frozenset(pi)
    return _o_pi(g, pi)


@memoized("o_pi")
def _o_pi(g: Group, pi: frozenset[int]) -> Subgroup:
    if not pi:
        return g.trivial()
    return join_all(g, (m for m in normal_lattice(g) if is_pi_number(m.order, pi)))


def o_p(g: Group, p: int) -> Subgroup:
    return o_pi(g, {p})


@memoized("fitting")
def fitting(g: Group) -> Subgroup:
    return join_all(g, (o_p(g, p) for p in prime_factors(g.order)))


# --- series predicates -----------------------------------------------------------

def lower_central_series(g: Group) -> list[Subgroup]:
    terms = [g.whole()]
    while True:
        nxt = commutator_subgroup(g, terms[-1], g.whole())
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


def derived_series(g: Group) -> list[Subgroup]:
    terms = [g.whole()]
    while True:
        nxt = commutator_subgroup(g, terms[-1], terms[-1])
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


@memoized("is_nilpotent")
def is_nilpotent(g: Group) -> bool:
    return lower_central_series(g)[-1].is_trivial()


@memoized("is_soluble")
def is_soluble(g: Group) -> bool:
    return derived_series(g)[-1].is_trivial()


# --- inner action on sections ------------------------------------------------------

def acts_as_inner(x: Permutation | int, s: Section) -> bool:
    """Whether conjugation by ``x`` agrees on ``s.top/s.bottom`` with
    conjugation by some element of ``s.top``."""
    g = s.top.parent
    t = g.table
    xi = g.index(x) if isinstance(x, Permutation) else int(x)
    gens = np.array(s.top.gens, dtype=np.int64)
    if len(gens) == 0:
        return True
    bottom = s.bottom.bits

    def conj(a: np.ndarray, y: int) -> np.ndarray:
        return t.mul[t.mul[t.inv[y], a], y]

    target = conj(gens, xi)
    for h in s.top.indices:
        # a^x and a^h agree mod bottom iff a^x (a^h)^-1 lies in bottom
        if bottom[t.mul[target, t.inv[conj(gens, int(h))]]].all():
            return True
    return False


def section_centralizer(g: Group, s: Section) -> Subgroup:
    """Elements ``x`` with ``[x, a]`` in ``s.bottom`` for all ``a`` in ``s.top``."""
    t = g.table
    bottom = s.bottom.bits
    keep = np.ones(g.order, dtype=bool)
    xs = np.arange(g.order)
    for a in s.top.gens:
        comm = t.mul[t.mul[t.inv[xs], t.inv[a]], t.mul[xs, a]]
        keep &= bottom[comm]
    return subgroup_from_bits(g, keep)


def inneriser(g: Group, s: Section) -> Subgroup:
    return join(s.top, section_centralizer(g, s))


@memoized("is_quasinilpotent")
def is_quasinilpotent(g: Group, pick: str = "smallest") -> bool:
    """Every element acts as an inner automorphism on every chief factor of
    one chief series.  The elements acting innerly on a factor form a
    subgroup, so checking the generators of ``g`` covers all of ``g``."""
    series = chief_series(g, pick=pick)
    gens = g.whole().gens
    return all(acts_as_inner(x, f) for f in series.factors() for x in gens)


# --- generalised Fitting subgroup ----------------------------------------------------

@memoized("f_star")
def f_star(g: Group) -> Subgroup:
    """Preimage of the socle of ``F(g)C_g(F(g))/F(g)``."""
    if g.order == 1:
        return g.trivial()
    fit = fitting(g)
    fc = join(fit, centralizer(g, fit))
    host = fc.group
    q = quotient(host, fc.restrict(fit))
    return fc.embed(q.preimage(socle(q.target)))


@memoized("f_star_oracle")
def f_star_oracle(g: Group) -> Subgroup:
    """Join of all normal quasinilpotent subgroups."""
    value = join_all(g, (n for n in normal_lattice(g) if is_quasinilpotent(n.group)))
    if not is_quasinilpotent(value.group):
        raise GroupError("join of normal quasinilpotent subgroups is not quasinilpotent")
    return value


@memoized("f_star_by_innerisers")
def f_star_by_innerisers(g: Group) -> Subgroup:
    return meet_all(g, (inneriser(g, f) for f in chief_series(g).factors()))


@memoized("fitting_by_centralizers")
def fitting_by_centralizers(g: Group) -> Subgroup:
    return meet_all(g, (section_centralizer(g, f) for f in chief_series(g).factors()))


# --- Frattini-based radicals ---------------------------------------------------------

@memoized("f_tilde")
def f_tilde(g: Group) -> Subgroup:
    """Preimage of ``Soc(g/Phi(g))``."""
    q = quotient(g, frattini(g))
    return q.preimage(socle(q.target))


@memoized("f_tilde_forster")
def f_tilde_forster(g: Group) -> Subgroup:
    """Preimage of ``F*(g/Phi(g))``."""
    q = quotient(g, frattini(g))
    return q.preimage(f_star(q.target))


def frattini_of_quotient(g: Group, k: Subgroup) -> Subgroup:
    """Preimage in ``g`` of ``Phi(g/k)``."""
    if k.is_trivial():
        return frattini(g)
    q = quotient(g, k)
    return q.preimage(frattini(q.target))


def non_frattini_factors(g: Group) -> list[Section]:
    """Chief factors ``H/K`` of a chief series through ``Phi(g)`` with ``H``
    not inside the preimage of ``Phi(g/K)``."""
    series = chief_series(g, through=frattini(g))
    return [f for f in series.factors() if not f.top <= frattini_of_quotient(g, f.bottom)]


@memoized("f_tilde_by_innerisers")
def f_tilde_by_innerisers(g: Group) -> Subgroup:
    return meet_all(g, (inneriser(g, f) for f in non_frattini_factors(g)))


def phi_pi(g: Group, pi: Iterable[int]) -> Subgroup:
    """``O_pi(Phi(g))``: the Hall pi-part of the nilpotent Frattini subgroup."""
    phi = frattini(g)
    return phi.embed(o_pi(phi.group, pi))


def radical(g: Group, name: str) -> RadicalResult:
    """Look up a named radical and package it with a short witness."""
    fns = {
        "F": fitting, "Fstar": f_star, "Ftilde": f_tilde, "Phi": frattini, "Soc": socle,
        "Fstar_oracle": f_star_oracle, "Fstar_innerisers": f_star_by_innerisers,
        "F_centralizers": fitting_by_centralizers, "Ftilde_forster": f_tilde_forster,
        "Ftilde_innerisers": f_tilde_by_innerisers, "ASoc": abelian_socle,
    }
    if name not in fns:
        raise GroupError(f"unknown radical {name!r}; known: {', '.join(sorted(fns))}")
    value = fns[name](g)
    if not is_normal(value):
        raise GroupError(f"{name} produced a non-normal subgroup")
    witness: dict[str, Any] = {}
    if name in ("Fstar_innerisers", "F_centralizers"):
        witness["chief_factor_orders"] = chief_series(g).factor_orders()
    elif name == "Ftilde_innerisers":
        witness["non_frattini_factor_orders"] = [f.order for f in non_frattini_factors(g)]
    return RadicalResult(g, name, value, witness)

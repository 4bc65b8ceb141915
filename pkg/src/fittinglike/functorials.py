"""Subgroup functorials as expression trees.

Builtins name the radicals of :mod:`fittinglike.radicals`; combinators build
new functorials from old ones:

* ``Star(a, b)``: preimage of ``b(G/a(G))`` (upper product)
* ``Circ(a, b)``: ``b(a(G))`` (lower product)
* ``Meet``/``Join``: intersection / join of the member values
* ``Power(a, k)``: ``a`` applied ``k`` times along the lower product
* ``Omega(a)``: ``Power(a, k)`` at the first ``k`` where it stabilises

The text form accepted by :func:`fittinglike.parsing.parse_functorial` is
produced by ``str``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Union

from .config import GroupError
from .group import (
    Group,
    Subgroup,
    centralizer,
    join,
    join_all,
    meet_all,
    quotient,
)
from .lattice import frattini, normal_lattice, socle
from .memo import current_cache
from . import radicals


BUILTIN_NAMES = ("F", "Fstar", "Ftilde", "Phi", "PhiPi", "Soc", "Triv", "Id")


@dataclass(frozen=True)
class Builtin:
    name: str
    primes: frozenset[int] | None = None

    def __post_init__(self):
        if self.name not in BUILTIN_NAMES:
            raise GroupError(f"unknown builtin functorial {self.name!r}")
        if (self.name == "PhiPi") != (self.primes is not None):
            raise GroupError("PhiPi and only PhiPi carries a prime set")

    def __str__(self) -> str:
        if self.name == "PhiPi":
            return "Phi_pi{" + ",".join(map(str, sorted(self.primes))) + "}"
        return self.name


@dataclass(frozen=True)
class Star:
    left: Expr
    right: Expr

    def __str__(self) -> str:
        return _binary(self, "*")


@dataclass(frozen=True)
class Circ:
    left: Expr
    right: Expr

    def __str__(self) -> str:
        return _binary(self, "o")


@dataclass(frozen=True)
class Meet:
    items: tuple[Expr, ...]

    def __post_init__(self):
        if not self.items:
            raise GroupError("empty meet")

    def __str__(self) -> str:
        return " & ".join(_wrap(i, (Meet, Join)) for i in self.items)


@dataclass(frozen=True)
class Join:
    items: tuple[Expr, ...]

    def __post_init__(self):
        if not self.items:
            raise GroupError("empty join")

    def __str__(self) -> str:
        return " | ".join(_wrap(i, (Join,)) for i in self.items)


@dataclass(frozen=True)
class Power:
    base: Expr
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise GroupError("power exponent must be at least 1")

    def __str__(self) -> str:
        return f"{_wrap(self.base, (Star, Circ, Meet, Join, Power, Omega))}^{self.k}"


@dataclass(frozen=True)
class Omega:
    base: Expr

    def __str__(self) -> str:
        return f"{_wrap(self.base, (Star, Circ, Meet, Join, Power, Omega))}^inf"


Expr = Union[Builtin, Star, Circ, Meet, Join, Power, Omega]


def _wrap(e: Expr, needs_parens: tuple[type, ...]) -> str:
    return f"({e})" if isinstance(e, needs_parens) else str(e)


def _binary(e: Star | Circ, op: str) -> str:
    left = _wrap(e.left, (Meet, Join))
    right = _wrap(e.right, (Star, Circ, Meet, Join))
    return f"{left} {op} {right}"


F = Builtin("F")
FSTAR = Builtin("Fstar")
FTILDE = Builtin("Ftilde")
PHI = Builtin("Phi")
SOC = Builtin("Soc")
TRIV = Builtin("Triv")
ID = Builtin("Id")


def phi_pi(primes: Iterable[int]) -> Builtin:
    return Builtin("PhiPi", frozenset(primes))


# --- evaluation ------------------------------------------------------------------

def _builtin(b: Builtin, g: Group) -> Subgroup:
    if b.name == "F":
        return radicals.fitting(g)
    if b.name == "Fstar":
        return radicals.f_star(g)
    if b.name == "Ftilde":
        return radicals.f_tilde(g)
    if b.name == "Phi":
        return frattini(g)
    if b.name == "PhiPi":
        return radicals.phi_pi(g, b.primes)
    if b.name == "Soc":
        return socle(g)
    if b.name == "Triv":
        return g.trivial()
    return g.whole()


def _inside(expr: Expr, host: Subgroup) -> Subgroup:
    """Evaluate on ``host`` viewed as a group, mapped back into its parent."""
    if host.is_whole():
        return evaluate(expr, host.parent)
    return host.embed(evaluate(expr, host.group))


def omega(expr: Expr, g: Group) -> tuple[Subgroup, int]:
    """``expr^inf(g)`` together with the number of applications used."""
    cur = evaluate(expr, g)
    steps = 1
    while True:
        nxt = _inside(expr, cur)
        if nxt == cur:
            return cur, steps
        cur = nxt
        steps += 1
        if steps > g.order:
            raise GroupError("omega iteration failed to stabilise")


def evaluate(expr: Expr, g: Group) -> Subgroup:
    """Value of ``expr`` on ``g``, memoised per (expression, group)."""
    return current_cache().get_or_compute(("expr", expr, g), lambda: _evaluate(expr, g))


def _evaluate(expr: Expr, g: Group) -> Subgroup:
    if isinstance(expr, Builtin):
        return _builtin(expr, g)
    if isinstance(expr, Star):
        low = evaluate(expr.left, g)
        if low.is_trivial():
            # G/1 is G up to relabelling
            return evaluate(expr.right, g)
        q = quotient(g, low)
        return q.preimage(evaluate(expr.right, q.target))
    if isinstance(expr, Circ):
        return _inside(expr.right, evaluate(expr.left, g))
    if isinstance(expr, Meet):
        return meet_all(g, (evaluate(e, g) for e in expr.items))
    if isinstance(expr, Join):
        return join_all(g, (evaluate(e, g) for e in expr.items))
    if isinstance(expr, Power):
        cur = evaluate(expr.base, g)
        for _ in range(expr.k - 1):
            cur = _inside(expr.base, cur)
        return cur
    if isinstance(expr, Omega):
        return omega(expr.base, g)[0]
    raise TypeError(f"not a functorial expression: {expr!r}")


# --- axioms ------------------------------------------------------------------------

AXIOMS = ("F1", "F2", "F3", "F4", "F5")


@dataclass
class AxiomResult:
    passed: bool
    witness: Subgroup | None = None
    detail: str = ""


@dataclass
class AxiomReport:
    """Outcome of checking axioms for one expression on one group.

    F1 is checked on the quotient maps ``g -> g/N`` for every normal ``N``;
    any epimorphism is one of these followed by an isomorphism.
    """

    expr: Expr
    group: Group
    results: dict[str, AxiomResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> dict[str, AxiomResult]:
        return {k: r for k, r in self.results.items() if not r.passed}


def _check_f1(expr: Expr, g: Group, value: Subgroup) -> AxiomResult:
    for n in normal_lattice(g):
        if n.is_trivial():
            continue
        q = quotient(g, n)
        if not q.image(value) <= evaluate(expr, q.target):
            return AxiomResult(False, n, f"image of value not inside value of G/N, |N|={n.order}")
    return AxiomResult(True)


def _check_f2(expr: Expr, g: Group, value: Subgroup) -> AxiomResult:
    for n in normal_lattice(g):
        if not _inside(expr, n) <= value:
            return AxiomResult(False, n, f"value of N not inside value of G, |N|={n.order}")
    return AxiomResult(True)


def _check_f3(expr: Expr, g: Group, value: Subgroup) -> AxiomResult:
    c = centralizer(g, value)
    if c <= value:
        return AxiomResult(True)
    return AxiomResult(False, c, f"centralizer of order {c.order} escapes value of order {value.order}")


def _check_f4(expr: Expr, g: Group, value: Subgroup) -> AxiomResult:
    q = quotient(g, frattini(g))
    img = q.image(value)
    if img <= socle(q.target):
        return AxiomResult(True)
    return AxiomResult(False, value, "value modulo Phi(G) not inside Soc(G/Phi(G))")


def _check_f5(expr: Expr, g: Group, value: Subgroup) -> AxiomResult:
    for n in normal_lattice(g):
        if not (value & n) <= _inside(expr, n):
            return AxiomResult(False, n, f"value meet N not inside value of N, |N|={n.order}")
    return AxiomResult(True)


_CHECKS = {"F1": _check_f1, "F2": _check_f2, "F3": _check_f3, "F4": _check_f4, "F5": _check_f5}


def check_axioms(expr: Expr, g: Group, which: Iterable[str] = AXIOMS) -> AxiomReport:
    report = AxiomReport(expr, g)
    value = evaluate(expr, g)
    for name in which:
        if name not in _CHECKS:
            raise GroupError(f"unknown axiom {name!r}")
        report.results[name] = _CHECKS[name](expr, g, value)
    return report


# --- lattice of values ----------------------------------------------------------------

@dataclass
class LatticeVerdict:
    distributive: bool
    size: int
    counterexample: tuple[Subgroup, Subgroup, Subgroup] | None = None


def values_lattice(g: Group, family: Iterable[Expr]) -> LatticeVerdict:
    """Close the family's values under meet and join and test both
    distributive laws on every triple."""
    vals: dict[int, Subgroup] = {}
    for e in family:
        v = evaluate(e, g)
        vals.setdefault(v.mask, v)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(vals.values()), 2):
            for c in (a & b, join(a, b)):
                if c.mask not in vals:
                    vals[c.mask] = c
                    changed = True
    members = list(vals.values())
    for a, b, c in itertools.product(members, repeat=3):
        if a & join(b, c) != join(a & b, a & c) or join(a, b & c) != (join(a, b) & join(a, c)):
            return LatticeVerdict(False, len(members), (a, b, c))
    return LatticeVerdict(True, len(members))


# --- classes of groups ------------------------------------------------------------------

def radical_class_membership(expr: Expr, g: Group) -> bool:
    return evaluate(expr, g).is_whole()


def gamma_class_radical(expr: Expr, g: Group) -> Subgroup:
    """Join of the normal subgroups ``N`` with ``expr(N) = N``."""
    return join_all(g, (n for n in normal_lattice(g) if radical_class_membership(expr, n.group)))

"""Heights along functorial series, subnormality and mutually permutable products.

The ``expr``-series of ``g`` starts at the trivial subgroup and at each step
pulls back ``expr`` of the current quotient.  Its length is the height.
The ``verify_*`` functions return a :class:`Verdict` holding the numbers
compared, so callers can print or serialise them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .config import GroupError, StalledSeriesError
from .functorials import FSTAR, FTILDE, Expr, check_axioms, evaluate
from .group import (
    Group,
    Subgroup,
    as_subgroup,
    conjugate,
    join,
    meet_all,
    normal_closure,
    normalizer,
    quotient,
)
from .lattice import _cyclic_subgroups, all_subgroups, maximal_subgroups, normal_lattice
from .memo import current_cache, memoized
from .radicals import f_star, f_tilde, inneriser, is_nilpotent, is_quasinilpotent, is_soluble, prime_factors


@dataclass
class Verdict:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


# --- series and heights -------------------------------------------------------------

@dataclass(frozen=True)
class GammaSeries:
    group: Group
    expr: Expr
    terms: tuple[Subgroup, ...]

    @property
    def height(self) -> int:
        return len(self.terms) - 1


def gamma_series(g: Group, expr: Expr) -> GammaSeries:
    """Ascending ``expr``-series; raises :class:`StalledSeriesError` when a
    nontrivial quotient has a trivial value."""
    return current_cache().get_or_compute(("gamma_series", expr, g), lambda: _gamma_series(g, expr))


def _gamma_series(g: Group, expr: Expr) -> GammaSeries:
    terms = [g.trivial()]
    while not terms[-1].is_whole():
        cur = terms[-1]
        if cur.is_trivial():
            nxt = evaluate(expr, g)
        else:
            q = quotient(g, cur)
            nxt = q.preimage(evaluate(expr, q.target))
        if nxt == cur:
            raise StalledSeriesError(
                f"{expr} is trivial on a quotient of order {g.order // cur.order}; "
                "the series cannot reach the whole group")
        terms.append(nxt)
    return GammaSeries(g, expr, tuple(terms))


def h_gamma(g: Group, expr: Expr) -> int:
    return gamma_series(g, expr).height


def h_star(g: Group) -> int:
    return h_gamma(g, FSTAR)


def fitting_height(g: Group) -> int:
    from .functorials import F
    if not is_soluble(g):
        raise GroupError("Fitting height is only defined for soluble groups")
    return h_gamma(g, F)


@memoized("quasinilpotent_residual")
def quasinilpotent_residual(g: Group) -> Subgroup:
    """Smallest normal subgroup with a quasinilpotent quotient."""
    good = []
    for n in normal_lattice(g):
        target = g if n.is_trivial() else quotient(g, n).target
        if is_quasinilpotent(target):
            good.append(n)
    res = meet_all(g, good)
    if res not in good:
        raise GroupError("quasinilpotent quotients are not closed under intersection here")
    return res


# --- subnormality ---------------------------------------------------------------------

def is_subnormal(h: Subgroup, k: Group | Subgroup | None = None) -> bool:
    """Whether ``h`` is subnormal in ``k`` (default: the whole parent).

    Walks ``k``, the normal closure of ``h`` in ``k``, the normal closure of
    ``h`` in that, and so on, until the chain stops moving.
    """
    g = h.parent
    cur = g.whole() if k is None else as_subgroup(k)
    if not h <= cur:
        return False
    while True:
        nxt = normal_closure(g, h, cur)
        if nxt == cur:
            return cur == h
        cur = nxt


def is_r_subnormal(h: Subgroup, r: Subgroup) -> bool:
    """Whether ``h`` is subnormal in ``<h, r>``."""
    return is_subnormal(h, join(h, r))


# --- subgroup index with cached joins ------------------------------------------------

class SubgroupIndex:
    """All subgroups of a group, with joins and permutability read off masks."""

    def __init__(self, g: Group):
        self.group = g
        self.subs = all_subgroups(g)
        self.by_mask = {s.mask: s for s in self.subs}
        self._joins: dict[tuple[int, int], Subgroup] = {}

    def join(self, a: int, b: int) -> Subgroup:
        key = (a, b) if a <= b else (b, a)
        out = self._joins.get(key)
        if out is None:
            both = a | b
            out = self.by_mask.get(both)
            if out is None:
                out = next(s for s in self.subs if s.mask & both == both)
            self._joins[key] = out
        return out

    def below(self, mask: int) -> list[Subgroup]:
        return [s for s in self.subs if s.mask & mask == s.mask]

    def permutes(self, a: int, b: int) -> bool:
        """``AB = BA``, i.e. the set product has the order of the join."""
        prod = a.bit_count() * b.bit_count() // (a & b).bit_count()
        return self.join(a, b).order == prod


def subgroup_index(g: Group) -> SubgroupIndex:
    return current_cache().get_or_compute(("subgroup_index", g), lambda: SubgroupIndex(g))


# --- mutually permutable products ----------------------------------------------------

@dataclass(frozen=True)
class MutuallyPermutablePair:
    group: Group
    a: Subgroup
    b: Subgroup


def is_mutually_permutable(a: Subgroup, b: Subgroup) -> bool:
    idx = subgroup_index(a.parent)
    if a.order * b.order != a.parent.order * (a.mask & b.mask).bit_count():
        return False
    return (all(idx.permutes(a.mask, u.mask) for u in idx.below(b.mask))
            and all(idx.permutes(b.mask, u.mask) for u in idx.below(a.mask)))


@memoized("mutually_permutable")
def find_mutually_permutable(g: Group) -> list[MutuallyPermutablePair]:
    """Every unordered pair ``{A, B}`` with ``G = AB`` mutually permutable."""
    idx = subgroup_index(g)
    n = g.order
    out = []
    for i, a in enumerate(idx.subs):
        for b in idx.subs[i:]:
            if a.order * b.order == n * (a.mask & b.mask).bit_count() and is_mutually_permutable(a, b):
                out.append(MutuallyPermutablePair(g, a, b))
    return out


# --- theorem checks ------------------------------------------------------------------

def verify_theorem7(g: Group, expr: Expr) -> Verdict:
    """``h_Ftilde <= h_expr <= 2 h_Ftilde``."""
    lo = h_gamma(g, FTILDE)
    mid = h_gamma(g, expr)
    return Verdict("theorem7", lo <= mid <= 2 * lo,
                   {"expr": str(expr), "h_Ftilde": lo, "h_expr": mid, "upper": 2 * lo})


def verify_theorem8(pair: MutuallyPermutablePair) -> Verdict:
    """``max(h*(A), h*(B)) <= h*(G) <= max(h*(A), h*(B)) + 1``."""
    ha, hb = h_star(pair.a.group), h_star(pair.b.group)
    hg = h_star(pair.group)
    m = max(ha, hb)
    return Verdict("theorem8", m <= hg <= m + 1,
                   {"h_A": ha, "h_B": hb, "h_G": hg, "order_A": pair.a.order, "order_B": pair.b.order})


def verify_theorem9_direct(product: Group, factors: Iterable[Group], expr: Expr = FSTAR) -> Verdict:
    """Height of a direct product equals the largest height of its factors."""
    hs = [h_gamma(f, expr) for f in factors]
    hp = h_gamma(product, expr)
    return Verdict("theorem9_direct", hp == max(hs, default=0),
                   {"expr": str(expr), "h_factors": hs, "h_product": hp})


def subnormal_subgroups(g: Group) -> list[Subgroup]:
    return [s for s in subgroup_index(g).subs if is_subnormal(s)]


def verify_theorem9_joins(g: Group, expr: Expr = FSTAR, limit: int = 400) -> Verdict:
    """For pairs of proper subnormal subgroups generating ``g``: the height of
    ``g`` is at most the larger factor height, with equality once ``expr``
    passes the hereditary axiom on ``g``."""
    sn = [s for s in subnormal_subgroups(g) if not s.is_whole()]
    idx = subgroup_index(g)
    hereditary = check_axioms(expr, g, ("F5",)).passed
    hg = h_gamma(g, expr)
    checked = 0
    bad = []
    for a, b in itertools.combinations(sn, 2):
        if checked >= limit:
            break
        if not idx.join(a.mask, b.mask).is_whole():
            continue
        checked += 1
        m = max(h_gamma(a.group, expr), h_gamma(b.group, expr))
        ok = hg == m if hereditary else hg <= m
        if not ok:
            bad.append({"order_A": a.order, "order_B": b.order, "max_factor_height": m})
    return Verdict("theorem9_joins", not bad,
                   {"expr": str(expr), "h_G": hg, "pairs_checked": checked,
                    "equality_tested": hereditary, "failures": bad})


def verify_lemma10(g: Group) -> Verdict:
    """``h*(residual) = h*(g) - 1`` for nontrivial ``g``."""
    res = quasinilpotent_residual(g)
    hr, hg = h_star(res.group), h_star(g)
    return Verdict("lemma10", hr == hg - 1, {"h_residual": hr, "h_G": hg, "order_residual": res.order})


def verify_lemma11(g: Group) -> Verdict:
    """The ``n``-th star-series term is ``g`` exactly when ``h*(g) <= n``;
    each term is also rebuilt by evaluating an iterated upper product."""
    from .functorials import Star
    series = gamma_series(g, FSTAR)
    hg = series.height
    ok = True
    expr = FSTAR
    for n in range(1, hg + 2):
        term = series.terms[min(n, hg)]
        ok &= term.is_whole() == (hg <= n)
        ok &= evaluate(expr, g) == term
        expr = Star(expr, FSTAR)
    return Verdict("lemma11", ok, {"h_G": hg})


def verify_lemma12(pair: MutuallyPermutablePair) -> Verdict | None:
    """``h*(G) <= 2`` when both factors are quasinilpotent; ``None`` otherwise."""
    if not (is_quasinilpotent(pair.a.group) and is_quasinilpotent(pair.b.group)):
        return None
    hg = h_star(pair.group)
    return Verdict("lemma12", hg <= 2, {"h_G": hg, "order_A": pair.a.order, "order_B": pair.b.order})


def verify_lemma13(g: Group) -> Verdict:
    """For each minimal normal ``N`` and ``k = h*(G/C*(N)) + 1``, the ``k``-th
    star-series term of ``G/N`` is the image of that of ``G``."""
    from .lattice import Section, minimal_normal_subgroups
    details = []
    ok = True
    for n in minimal_normal_subgroups(g):
        inner = inneriser(g, Section(n, g.trivial(), chief=True))
        top = g if inner.is_trivial() else quotient(g, inner).target
        k = h_star(top) + 1
        q = quotient(g, n)
        lhs = gamma_series(q.target, FSTAR).terms
        rhs = gamma_series(g, FSTAR).terms
        left = lhs[min(k, len(lhs) - 1)]
        right = q.image(rhs[min(k, len(rhs) - 1)])
        details.append({"order_N": n.order, "k": k, "agree": left == right})
        ok &= left == right
    return Verdict("lemma13", ok, {"factors": details})


# --- nilpotency criteria -------------------------------------------------------------

def sylow_subgroups(g: Group) -> dict[int, list[Subgroup]]:
    """All Sylow subgroups, read off the subgroup list by full ``p``-part order."""
    out = {}
    for p in prime_factors(g.order):
        pp = 1
        while g.order % (pp * p) == 0:
            pp *= p
        out[p] = [s for s in subgroup_index(g).subs if s.order == pp]
    return out


def is_abnormal(h: Subgroup) -> bool:
    """``x`` lies in ``<h, h^x>`` for every ``x``."""
    g = h.parent
    if not normalizer(g, h) == h:
        return False
    idx = subgroup_index(g)
    for x in range(g.order):
        if h.has_index(x):
            continue
        if not idx.join(h.mask, conjugate(h, x).mask).has_index(x):
            return False
    return True


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def verify_nilpotency_criteria(g: Group) -> Verdict:
    """Six equivalent characterisations of nilpotency, computed separately."""
    idx = subgroup_index(g)
    fs, ft = f_star(g), f_tilde(g)
    sylows = [s for ss in sylow_subgroups(g).values() for s in ss]
    cyclic = _cyclic_subgroups(g)
    cyclic_primary = [idx.by_mask[m] for m in cyclic if _is_prime_power(m.bit_count())]
    verdicts = {
        "nilpotent": is_nilpotent(g),
        "maximal_Ftilde_subnormal": all(is_r_subnormal(m, ft) for m in maximal_subgroups(g)),
        "abnormal_Fstar_subnormal": all(is_r_subnormal(h, fs) for h in idx.subs if is_abnormal(h)),
        "sylow_normalizers_Fstar_subnormal": all(is_r_subnormal(normalizer(g, p), fs) for p in sylows),
        "cyclic_primary_Fstar_subnormal": all(is_r_subnormal(c, fs) for c in cyclic_primary),
        "sylow_Fstar_subnormal": all(is_r_subnormal(p, fs) for p in sylows),
    }
    return Verdict("nilpotency_criteria", len(set(verdicts.values())) == 1, verdicts)

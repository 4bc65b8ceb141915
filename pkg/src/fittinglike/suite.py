"""Catalog-wide verification suites and the JSON report they produce.

A suite is a generator of named checks for one group.  Each check returns
``(passed, details)``; a check that hits a size cap is recorded as SKIPPED
with the cap message and never counts as a failure.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Iterator

from . import __version__
from .catalog import CATALOG, CatalogEntry
from .config import CapExceeded, Caps, get_caps, using_caps
from .functorials import (
    F,
    FSTAR,
    FTILDE,
    PHI,
    SOC,
    TRIV,
    ID,
    Circ,
    Omega,
    Star,
    check_axioms,
    evaluate,
    gamma_class_radical,
    phi_pi,
    values_lattice,
)
from .group import Group, Subgroup, centralizer, direct_product, quotient
from .heights import (
    find_mutually_permutable,
    fitting_height,
    h_gamma,
    h_star,
    is_subnormal,
    verify_lemma10,
    verify_lemma11,
    verify_lemma12,
    verify_lemma13,
    verify_nilpotency_criteria,
    verify_theorem7,
    verify_theorem8,
    verify_theorem9_direct,
    verify_theorem9_joins,
)
from .lattice import abelian_socle, all_subgroups, chief_series, frattini, m_intersection, normal_lattice, socle
from .memo import MemoCache, memo_scope
from .oracles import largest_normal_nilpotent, naive_order, subnormal_by_chains
from .perm import Permutation
from .radicals import (
    f_star,
    f_star_by_innerisers,
    f_star_oracle,
    f_tilde,
    f_tilde_by_innerisers,
    f_tilde_forster,
    fitting,
    fitting_by_centralizers,
    is_quasinilpotent,
    is_soluble,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"

Outcome = tuple[bool, dict[str, Any]]
Check = tuple[str, Callable[[], Outcome]]

PI_SETS = (frozenset(), frozenset({2}), frozenset({3}), frozenset({2, 3}))
HEIGHT_EXPRS = (FTILDE, Star(phi_pi({2}), FSTAR), Star(phi_pi({3}), FSTAR))
LATTICE_FAMILY = (FSTAR, FTILDE, Star(phi_pi({2}), FSTAR), Star(phi_pi({3}), FSTAR))
SUBNORMAL_ORACLE_MAX = 48


@dataclass
class GroupContext:
    entry: CatalogEntry
    group: Group


def describe(s: Subgroup) -> dict[str, Any]:
    return {"order": s.order, "generators": [str(p) for p in s.generators]}


def _verdict(v) -> Outcome:
    return v.passed, v.details


def _orders(*subs: Subgroup) -> list[int]:
    return [s.order for s in subs]


# --- suites -------------------------------------------------------------------------

def suite_engine(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def chain_vs_closure() -> Outcome:
        if g.order > get_caps().max_order:
            raise CapExceeded(f"closure comparison limited to order <= {get_caps().max_order}")
        naive = naive_order(g)
        return naive == g.order, {"chain": g.order, "closure": naive}

    def quotients() -> Outcome:
        bad = []
        for n in normal_lattice(g):
            q = quotient(g, n)
            if q.target.order * n.order != g.order or g.order % n.order:
                bad.append(n.order)
        return not bad, {"normal_subgroups": len(normal_lattice(g)), "bad_orders": bad}

    yield "chain_order_vs_closure", chain_vs_closure
    yield "quotient_orders", quotients


def suite_radicals(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def fstar() -> Outcome:
        a, b, c = f_star(g), f_star_oracle(g), f_star_by_innerisers(g)
        return a == b == c, {"orders": _orders(a, b, c)}

    def fit() -> Outcome:
        a, b, c = fitting(g), fitting_by_centralizers(g), largest_normal_nilpotent(g)
        return a == b == c, {"orders": _orders(a, b, c)}

    def ftilde() -> Outcome:
        a, b, c = f_tilde(g), f_tilde_forster(g), f_tilde_by_innerisers(g)
        return a == b == c, {"orders": _orders(a, b, c)}

    def fitting_mod_frattini() -> Outcome:
        phi = frattini(g)
        q = quotient(g, phi)
        via_f = q.preimage(fitting(q.target))
        via_asoc = q.preimage(abelian_socle(q.target))
        return via_f == fitting(g) == via_asoc, {"orders": _orders(via_f, fitting(g), via_asoc)}

    def series_independence() -> Outcome:
        a, b = chief_series(g), chief_series(g, pick="largest")
        qa, qb = is_quasinilpotent(g, "smallest"), is_quasinilpotent(g, "largest")
        same = sorted(a.factor_orders()) == sorted(b.factor_orders())
        return same and qa == qb, {"factor_orders": a.factor_orders(), "second": b.factor_orders(),
                                   "quasinilpotent": qa}

    def relabelled_copy() -> Outcome:
        # conjugate by the point reversal and compare values transported back
        n = g.degree
        r = Permutation(list(range(n - 1, -1, -1)))
        copy = Group([~r * p * r for p in g.generators], n)
        out = {}
        ok = True
        for e in (F, FSTAR, SOC, FTILDE, PHI):
            try:
                v, w = evaluate(e, g), evaluate(e, copy)
            except CapExceeded:
                out[str(e)] = "beyond cap"
                continue
            moved = copy.subgroup([~r * p * r for p in v.generators])
            out[str(e)] = v.order
            ok &= moved == w
        return ok, {"orders": out}

    yield "Fstar_three_ways", fstar
    yield "F_three_ways", fit
    yield "Ftilde_three_ways", ftilde
    yield "F_modulo_Phi", fitting_mod_frattini
    yield "chief_series_independence", series_independence
    yield "relabelled_copy", relabelled_copy


def suite_collapse(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def sandwich() -> Outcome:
        f, fs = fitting(g), f_star(g)
        nontrivial = g.order == 1 or not fs.is_trivial()
        selfc = centralizer(g, fs) <= fs
        try:
            ft = f_tilde(g)
        except CapExceeded:
            return f <= fs and nontrivial and selfc, {"orders": _orders(f, fs), "Ftilde": "beyond cap"}
        ok = f <= fs <= ft and nontrivial and selfc and centralizer(g, ft) <= ft
        return ok, {"orders": _orders(f, fs, ft)}

    def soluble() -> Outcome:
        if not is_soluble(g):
            return True, {"soluble": False}
        f, fs, ft = fitting(g), f_star(g), f_tilde(g)
        return f == fs == ft, {"soluble": True, "orders": _orders(f, fs, ft)}

    yield "sandwich_and_self_centralizing", sandwich
    yield "soluble_collapse", soluble


def suite_theorem4(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def equivalence() -> Outcome:
        left = f_tilde(g).is_whole()
        right = m_intersection(g) == frattini(g)
        return left == right, {"Ftilde_is_G": left, "M_equals_Phi": right}

    yield "theorem4", equivalence


def _axiom_outcome(expr, g, which) -> Outcome:
    rep = check_axioms(expr, g, which)
    fails = {k: {"witness": describe(r.witness) if r.witness is not None else None, "detail": r.detail}
             for k, r in rep.failures().items()}
    return rep.passed, {"expr": str(expr), "checked": list(which), "failures": fails}


def suite_axioms(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group
    yield "Fstar_F1_F2_F3_F5", lambda: _axiom_outcome(FSTAR, g, ("F1", "F2", "F3", "F5"))
    yield "Fstar_F4", lambda: _axiom_outcome(FSTAR, g, ("F4",))
    yield "Ftilde_F1_F4", lambda: _axiom_outcome(FTILDE, g, ("F1", "F2", "F3", "F4"))
    for pi in PI_SETS:
        expr = Star(phi_pi(pi), FSTAR)

        def upper(expr=expr) -> Outcome:
            ok, det = _axiom_outcome(expr, g, ("F1", "F2", "F3", "F4"))
            v = evaluate(expr, g)
            between = f_star(g) <= v <= f_tilde(g)
            det["between_Fstar_and_Ftilde"] = between
            return ok and between, det

        yield f"{expr}_F1_F4", upper

    def triv_control() -> Outcome:
        # the trivial value is never self-centralizing on a nontrivial group
        r = check_axioms(TRIV, g, ("F3",)).results["F3"]
        ok = r.passed == (g.order == 1) and (r.passed or r.witness is not None)
        return ok, {"Triv_F3": r.passed}

    def id_control() -> Outcome:
        # the whole group satisfies F4 exactly when Ftilde is everything
        r = check_axioms(ID, g, ("F4",)).results["F4"]
        ok = r.passed == f_tilde(g).is_whole() and (r.passed or r.witness is not None)
        return ok, {"Id_F4": r.passed}

    yield "Triv_F3_control", triv_control
    yield "Id_F4_control", id_control


def suite_theorem7(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group
    for expr in HEIGHT_EXPRS:
        yield f"theorem7[{expr}]", (lambda expr=expr: _verdict(verify_theorem7(g, expr)))


def suite_residual(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def lemma10() -> Outcome:
        if g.order == 1:
            return True, {"trivial_group": True}
        return _verdict(verify_lemma10(g))

    yield "lemma10", lemma10
    yield "lemma11", lambda: _verdict(verify_lemma11(g))
    yield "lemma13", lambda: _verdict(verify_lemma13(g))


def suite_theorem8(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def theorem8() -> Outcome:
        pairs = find_mutually_permutable(g)
        bad = [v.details for v in map(verify_theorem8, pairs) if not v.passed]
        return not bad, {"pairs": len(pairs), "failures": bad}

    def lemma12() -> Outcome:
        pairs = find_mutually_permutable(g)
        vs = [v for v in map(verify_lemma12, pairs) if v is not None]
        bad = [v.details for v in vs if not v.passed]
        return not bad, {"quasinilpotent_pairs": len(vs), "failures": bad}

    yield "theorem8", theorem8
    yield "lemma12", lemma12


def suite_theorem9(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group
    factors = ctx.entry.factors
    if factors is not None:
        yield "direct_product_Fstar", lambda: _verdict(verify_theorem9_direct(g, factors, FSTAR))
        yield "direct_product_Ftilde", lambda: _verdict(verify_theorem9_direct(g, factors, FTILDE))
    yield "subnormal_joins_Fstar", lambda: _verdict(verify_theorem9_joins(g, FSTAR))


def suite_nilpotency(ctx: GroupContext) -> Iterator[Check]:
    yield "six_criteria", lambda: _verdict(verify_nilpotency_criteria(ctx.group))


def suite_lattice(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def distributive() -> Outcome:
        v = values_lattice(g, LATTICE_FAMILY)
        det = {"lattice_size": v.size}
        if v.counterexample:
            det["counterexample"] = [describe(s) for s in v.counterexample]
        return v.distributive, det

    yield "values_distributive", distributive


def suite_laws(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    for gam in (FSTAR, FTILDE, *(Star(phi_pi(pi), FSTAR) for pi in PI_SETS)):
        def zero_element(gam=gam) -> Outcome:
            fs = evaluate(FSTAR, g)
            a, b = evaluate(Circ(FSTAR, gam), g), evaluate(Circ(gam, FSTAR), g)
            return a == fs == b, {"orders": _orders(fs, a, b)}

        yield f"Fstar_zero_element[{gam}]", zero_element

    def phi_star_ftilde() -> Outcome:
        a, b = evaluate(Star(PHI, FTILDE), g), evaluate(FTILDE, g)
        return a == b, {"orders": _orders(a, b)}

    def idempotence() -> Outcome:
        out = {}
        ok = True
        for base in (FTILDE, Star(phi_pi({2}), FSTAR)):
            v = evaluate(Omega(base), g)
            again = evaluate(base, v.group)
            out[str(base)] = v.order
            ok &= again.is_whole()
        fs = f_star(g)
        ok &= f_star(fs.group).is_whole()
        return ok, {"omega_orders": out}

    for base in (FSTAR, FTILDE):
        def class_radical(base=base) -> Outcome:
            a, b = gamma_class_radical(base, g), evaluate(Omega(base), g)
            return a == b, {"orders": _orders(a, b)}

        yield f"class_radical_is_omega[{base}]", class_radical

    factors = ctx.entry.factors
    if factors is not None:
        for e in (FSTAR, FTILDE):
            def direct_product_law(e=e) -> Outcome:
                dp = direct_product(*factors)
                whole = evaluate(e, dp.group)
                joined = dp.group.trivial()
                for i, f in enumerate(factors):
                    joined = joined | dp.embedding(i, evaluate(e, f))
                return whole == joined, {"orders": _orders(whole, joined)}

            yield f"direct_product_law[{e}]", direct_product_law

    yield "Phi_star_Ftilde", phi_star_ftilde
    yield "omega_idempotent", idempotence


def suite_subnormal(ctx: GroupContext) -> Iterator[Check]:
    g = ctx.group

    def oracle() -> Outcome:
        if g.order > SUBNORMAL_ORACLE_MAX:
            raise CapExceeded(f"chain oracle limited to order <= {SUBNORMAL_ORACLE_MAX}")
        subs = all_subgroups(g)
        reach = subnormal_by_chains(g)
        pairs = mismatches = 0
        for h in subs:
            for k in subs:
                if h <= k:
                    pairs += 1
                    mismatches += is_subnormal(h, k) != (k.mask in reach[h.mask])
        return mismatches == 0, {"pairs": pairs, "mismatches": mismatches}

    yield "chain_oracle", oracle


SUITES: dict[str, Callable[[GroupContext], Iterable[Check]]] = {
    "engine": suite_engine,
    "radicals-agreement": suite_radicals,
    "soluble-collapse": suite_collapse,
    "axioms": suite_axioms,
    "theorem4": suite_theorem4,
    "theorem7": suite_theorem7,
    "theorem8": suite_theorem8,
    "theorem9": suite_theorem9,
    "nilpotency-criteria": suite_nilpotency,
    "lattice-distributivity": suite_lattice,
    "functorial-laws": suite_laws,
    "residual-lemma10": suite_residual,
    "subnormal-oracle": suite_subnormal,
}


# --- report -------------------------------------------------------------------------

@dataclass
class CheckResult:
    suite: str
    check: str
    status: str
    details: dict[str, Any] = field(default_factory=dict)


@dataclass
class GroupReport:
    name: str
    construction: str
    order: int
    degree: int
    radicals: dict[str, Any]
    heights: dict[str, Any]
    results: list[CheckResult]
    seconds: float = 0.0


@dataclass
class Report:
    caps: Caps
    suites: list[str]
    groups: list[GroupReport]
    started: float = 0.0

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for gr in self.groups:
            for r in gr.results:
                out[r.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return self.counts()[FAIL] == 0

    def results(self, suite: str | None = None, check: str | None = None) -> Iterator[tuple[str, CheckResult]]:
        for gr in self.groups:
            for r in gr.results:
                if (suite is None or r.suite == suite) and (check is None or r.check == check):
                    yield gr.name, r

    def to_json(self, timing: bool = True) -> str:
        """Deterministic JSON; only the ``run`` block varies between runs."""
        doc: dict[str, Any] = {
            "tool_version": __version__,
            "caps": asdict(self.caps),
            "suites": self.suites,
            "summary": self.counts(),
            "groups": [],
        }
        timings = {}
        for gr in self.groups:
            d = asdict(gr)
            timings[gr.name] = round(d.pop("seconds"), 3)
            doc["groups"].append(d)
        if timing:
            doc["run"] = {"timestamp": self.started, "seconds_per_group": timings}
        return json.dumps(doc, indent=2, sort_keys=True, default=str)


def _safe(fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except CapExceeded as exc:
        return f"SKIPPED: {exc}"


def _group_summary(g: Group) -> tuple[dict[str, Any], dict[str, Any]]:
    rad = {name: _safe(lambda fn=fn: describe(fn(g)))
           for name, fn in (("F", fitting), ("Fstar", f_star), ("Ftilde", f_tilde),
                            ("Phi", frattini), ("Soc", socle))}
    heights = {"h_star": _safe(lambda: h_star(g)),
               "h_Ftilde": _safe(lambda: h_gamma(g, FTILDE)),
               "fitting_height": _safe(lambda: fitting_height(g)) if is_soluble(g) else None}
    return rad, heights


def run_group(entry: CatalogEntry, suites: Iterable[str]) -> GroupReport:
    t0 = time.perf_counter()
    g = entry.load()
    ctx = GroupContext(entry, g)
    results = []
    for name in suites:
        for check, fn in SUITES[name](ctx):
            try:
                ok, details = fn()
                results.append(CheckResult(name, check, PASS if ok else FAIL, details))
            except CapExceeded as exc:
                results.append(CheckResult(name, check, SKIPPED, {"reason": str(exc)}))
    rad, heights = _group_summary(g)
    return GroupReport(entry.name, entry.construction.describe(), g.order, g.degree,
                       rad, heights, results, time.perf_counter() - t0)


def resolve_suites(selection: str | Iterable[str]) -> list[str]:
    names = [selection] if isinstance(selection, str) else list(selection)
    if "all" in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {', '.join(unknown)}; known: {', '.join(SUITES)}")
    return names


def run_suite(catalog: Iterable[CatalogEntry] = CATALOG, caps: Caps | None = None,
              suites: str | Iterable[str] = "all",
              progress: Callable[[GroupReport], None] | None = None,
              workers: int = 1) -> Report:
    """Run the selected suites over the catalog with a fresh memo cache.

    With ``workers > 1`` groups run on a thread pool; the report keeps
    catalog order regardless of completion order.
    """
    names = resolve_suites(suites)
    caps = caps or get_caps()
    entries = list(catalog)
    started = time.time()
    cache = MemoCache()

    def one(entry: CatalogEntry) -> GroupReport:
        # caps and the memo cache are thread-local, so install them per worker
        with using_caps(caps), memo_scope(cache):
            return run_group(entry, names)

    if workers <= 1:
        groups = []
        for entry in entries:
            groups.append(one(entry))
            if progress:
                progress(groups[-1])
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(one, e) for e in entries]
            groups = [f.result() for f in futures]
        if progress:
            for gr in groups:
                progress(gr)
    return Report(caps, names, groups, started)

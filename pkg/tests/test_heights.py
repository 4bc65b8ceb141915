import pytest

from fittinglike.catalog import CATALOG
from fittinglike.config import GroupError, StalledSeriesError
from fittinglike.functorials import Builtin, Star, phi_pi
from fittinglike.group import conjugate, direct_product, join, normalizer
from fittinglike.heights import (
    fitting_height,
    find_mutually_permutable,
    gamma_series,
    h_gamma,
    h_star,
    is_abnormal,
    is_mutually_permutable,
    is_r_subnormal,
    is_subnormal,
    quasinilpotent_residual,
    sylow_subgroups,
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
from fittinglike.lattice import all_subgroups
from fittinglike.oracles import subnormal_by_chains
from fittinglike.radicals import is_nilpotent

from conftest import cat, sub

FSTAR, FTILDE, F, TRIV = Builtin("Fstar"), Builtin("Ftilde"), Builtin("F"), Builtin("Triv")
SMALL = [e.name for e in CATALOG if e.order <= 200]


def element_set(s):
    return {p.array for p in s.elements()}


# --- heights -------------------------------------------------------------------------

def test_s3_star_height_is_two():
    assert gamma_series(cat("S3"), FSTAR).height == 2
    assert h_star(cat("S3")) == 2


def test_s4_star_series():
    series = gamma_series(cat("S4"), FSTAR)
    assert [t.order for t in series.terms] == [1, 4, 12, 24]
    assert series.height == 3


def test_small_heights():
    assert h_star(cat("A5")) == 1
    assert h_star(cat("C1")) == 0
    assert fitting_height(cat("S4")) == 3
    assert h_star(cat("S3xA5")) == 2


@pytest.mark.parametrize("name", ["D8", "Q8", "C12", "Heisenberg27"])
def test_nilpotent_groups_have_height_one(name):
    g = cat(name)
    for e in (F, FSTAR, FTILDE, Star(phi_pi({2}), FSTAR)):
        assert h_gamma(g, e) == 1


def test_fitting_height_rejects_insoluble():
    with pytest.raises(GroupError, match="soluble"):
        fitting_height(cat("A5"))


def test_stalled_series():
    with pytest.raises(StalledSeriesError):
        gamma_series(cat("S3"), TRIV)
    with pytest.raises(StalledSeriesError):
        gamma_series(cat("A5"), F)


def test_residual_examples():
    assert quasinilpotent_residual(cat("A5")).is_trivial()
    s3 = cat("S3")
    assert quasinilpotent_residual(s3) == sub(s3, "(1 2 3)")
    assert quasinilpotent_residual(cat("S4")).order == 12


# --- subnormality ---------------------------------------------------------------------

def test_subnormal_examples():
    s4 = cat("S4")
    v4 = sub(s4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert is_subnormal(v4)
    assert not is_subnormal(sub(s4, "(1 2)"))
    d8 = sub(s4, "(1 2 3 4)", "(1 3)")
    assert is_subnormal(sub(s4, "(1 3)"), d8)
    assert is_subnormal(sub(s4, "(1 2)(3 4)"))


@pytest.mark.parametrize("name", [e.name for e in CATALOG if e.order <= 48])
def test_subnormal_matches_chain_oracle(name):
    g = cat(name)
    reach = subnormal_by_chains(g)
    subs = all_subgroups(g)
    for h in subs:
        for k in subs:
            assert is_subnormal(h, k) == (k.mask in reach[h.mask])


def test_r_subnormal():
    s3 = cat("S3")
    t, a3 = sub(s3, "(1 2)"), sub(s3, "(1 2 3)")
    assert not is_r_subnormal(t, a3)
    assert is_r_subnormal(a3, t)
    assert is_r_subnormal(t, s3.trivial())


# --- mutually permutable products ------------------------------------------------------

def test_s3_is_mutually_permutable_product_of_c2_and_a3():
    s3 = cat("S3")
    t, a3 = sub(s3, "(1 2)"), sub(s3, "(1 2 3)")
    assert is_mutually_permutable(t, a3)
    pairs = {frozenset((p.a.mask, p.b.mask)) for p in find_mutually_permutable(s3)}
    assert frozenset((t.mask, a3.mask)) in pairs
    assert frozenset((s3.whole().mask,)) in pairs
    assert frozenset((s3.whole().mask, 1)) in pairs


def brute_permutes(a, b):
    ea, eb = element_set(a), element_set(b)
    from fittinglike.perm import mul
    return {mul(x, y) for x in ea for y in eb} == {mul(y, x) for x in ea for y in eb}


@pytest.mark.parametrize("name", ["Q8", "S3", "D8", "C2xC2", "C6", "D12"])
def test_mutually_permutable_pairs_by_brute_force(name):
    g = cat(name)
    subs = all_subgroups(g)
    want = set()
    for i, a in enumerate(subs):
        for b in subs[i:]:
            if a.order * b.order != g.order * (a & b).order:
                continue
            if all(brute_permutes(a, u) for u in subs if u <= b) and all(
                    brute_permutes(b, u) for u in subs if u <= a):
                want.add((a.mask, b.mask))
    got = {(p.a.mask, p.b.mask) for p in find_mutually_permutable(g)}
    assert got == want


def test_q8_has_pairs_of_order_four_subgroups():
    pairs = find_mutually_permutable(cat("Q8"))
    assert any(p.a.order == 4 and p.b.order == 4 and p.a != p.b for p in pairs)


# --- height theorems ----------------------------------------------------------------

def test_theorem8_on_s3():
    s3 = cat("S3")
    pair = next(p for p in find_mutually_permutable(s3) if {p.a.order, p.b.order} == {2, 3})
    v = verify_theorem8(pair)
    assert v.passed
    assert max(v.details["h_A"], v.details["h_B"]) == 1 and v.details["h_G"] == 2


@pytest.mark.parametrize("name", ["S3", "S4", "D12", "S3xC3", "A4xC2", "SL(2,3)", "C2wrS3"])
def test_theorem8_and_lemma12_on_all_pairs(name):
    for pair in find_mutually_permutable(cat(name)):
        assert verify_theorem8(pair)
        v = verify_lemma12(pair)
        assert v is None or v.passed


def test_theorem9_on_s3_times_a5():
    v = verify_theorem9_direct(cat("S3xA5"), [cat("S3"), cat("A5")])
    assert v.passed and v.details["h_product"] == 2 and v.details["h_factors"] == [2, 1]


@pytest.mark.parametrize("pair", [("S4", "S3"), ("A4", "D8"), ("SL(2,3)", "C3")], ids="x".join)
def test_theorem9_on_built_products(pair):
    a, b = cat(pair[0]), cat(pair[1])
    dp = direct_product(a, b).group
    for e in (FSTAR, FTILDE):
        assert verify_theorem9_direct(dp, [a, b], e)


@pytest.mark.parametrize("name", ["S3xS3", "S4", "A4xC2", "D12"])
def test_theorem9_on_subnormal_joins(name):
    assert verify_theorem9_joins(cat(name))


@pytest.mark.parametrize("name", SMALL)
def test_theorem7(name):
    g = cat(name)
    for e in (FTILDE, Star(phi_pi({2}), FSTAR), Star(phi_pi({3}), FSTAR)):
        assert verify_theorem7(g, e)


def test_theorem7_on_nilpotent_group():
    v = verify_theorem7(cat("D8"), FSTAR)
    assert (v.details["h_Ftilde"], v.details["h_expr"], v.details["upper"]) == (1, 1, 2)


@pytest.mark.parametrize("name", [n for n in SMALL if n != "C1"])
def test_residual_lemmas(name):
    g = cat(name)
    assert verify_lemma10(g)
    assert verify_lemma11(g)
    assert verify_lemma13(g)


# --- nilpotency criteria ---------------------------------------------------------------

def brute_abnormal(h):
    g = h.parent
    for x in range(g.order):
        if not join(h, conjugate(h, x)).has_index(x):
            return False
    return True


@pytest.mark.parametrize("name", ["S3", "S4", "A4", "D12", "SL(2,3)"])
def test_abnormal_matches_definition(name):
    for h in all_subgroups(cat(name)):
        assert is_abnormal(h) == brute_abnormal(h)


def test_sylow_normalizers_are_abnormal_in_s4():
    g = cat("S4")
    for ps in sylow_subgroups(g).values():
        for p in ps:
            assert is_abnormal(normalizer(g, p))


@pytest.mark.parametrize("name,counts", [("S4", {2: 3, 3: 4}), ("A5", {2: 5, 3: 10, 5: 6}), ("S3", {2: 3, 3: 1})])
def test_sylow_counts(name, counts):
    assert {p: len(v) for p, v in sylow_subgroups(cat(name)).items()} == counts


@pytest.mark.parametrize("name", ["D8", "Q8", "C12"])
def test_nilpotent_groups_pass_all_six_criteria(name):
    v = verify_nilpotency_criteria(cat(name))
    assert v.passed and all(v.details.values())


@pytest.mark.parametrize("name", ["S3", "S4", "A4"])
def test_non_nilpotent_groups_fail_all_six_criteria(name):
    v = verify_nilpotency_criteria(cat(name))
    assert v.passed and not any(v.details.values())


@pytest.mark.parametrize("name", SMALL)
def test_criteria_agree_with_nilpotency(name):
    g = cat(name)
    v = verify_nilpotency_criteria(g)
    assert v.passed and v.details["nilpotent"] == is_nilpotent(g)


@pytest.mark.parametrize("name", ["S3", "S4", "D12", "S3xC3", "A4xC2", "SL(2,3)", "C3wrC2"])
def test_fitting_height_bound_for_soluble_products(name):
    g = cat(name)
    hg = fitting_height(g)
    for pair in find_mutually_permutable(g):
        m = max(fitting_height(pair.a.group), fitting_height(pair.b.group))
        assert m <= hg <= m + 1

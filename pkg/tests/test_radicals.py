import pytest

from fittinglike.catalog import CATALOG
from fittinglike.config import GroupError
from fittinglike.group import centralizer, is_normal, join_all
from fittinglike.lattice import Section, all_subgroups, chief_series, frattini, normal_lattice, socle
from fittinglike.oracles import largest_normal_nilpotent
from fittinglike.perm import Permutation
from fittinglike.radicals import (
    acts_as_inner,
    f_star,
    f_star_by_innerisers,
    f_star_oracle,
    f_tilde,
    f_tilde_by_innerisers,
    f_tilde_forster,
    fitting,
    fitting_by_centralizers,
    inneriser,
    is_nilpotent,
    is_quasinilpotent,
    is_soluble,
    o_p,
    o_pi,
    phi_pi,
    prime_factors,
    radical,
)

from conftest import cat, perm, sub

SMALL = [e.name for e in CATALOG if e.order <= 200]


def brute_inner(x, s):
    """Whether conjugation by x matches conjugation by some element of s.top, mod s.bottom."""
    bottom = {p.array for p in s.bottom.elements()}
    tops = s.top.elements()

    def agree(y):
        for a in tops:
            u = (~x) * a * x
            v = (~y) * a * y
            if (u * ~v).array not in bottom:
                return False
        return True

    return any(agree(y) for y in tops)


# --- inner action -------------------------------------------------------------------

def test_transposition_is_not_inner_on_a3():
    s3 = cat("S3")
    s = Section(sub(s3, "(1 2 3)"), s3.trivial())
    x = perm("(1 2)", 3)
    assert acts_as_inner(x, s) is False
    assert brute_inner(x, s) is False


def test_every_element_of_a5_is_inner_on_a5():
    a5 = cat("A5")
    s = Section(a5.whole(), a5.trivial())
    assert all(acts_as_inner(x, s) for x in a5)


def test_central_factor_is_inner():
    c4 = cat("C4")
    s = Section(c4.whole(), frattini(c4))
    assert all(acts_as_inner(x, s) for x in c4)


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "S3xS3", "C2wrS3"])
def test_acts_as_inner_matches_brute_force(name):
    g = cat(name)
    for f in chief_series(g).factors():
        for x in g:
            assert acts_as_inner(x, f) == brute_inner(x, f)


# --- cores and Fitting ----------------------------------------------------------------

def test_core_examples():
    s4 = cat("S4")
    assert o_p(s4, 2) == sub(s4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert o_p(cat("A5"), 5).is_trivial()
    assert o_pi(cat("C6"), {2, 3}).is_whole()
    assert o_pi(cat("S4"), set()).is_trivial()


def test_fitting_examples():
    s3 = cat("S3")
    assert fitting(s3) == sub(s3, "(1 2 3)")
    assert fitting(cat("A5")).is_trivial()
    for name in ["D8", "Q8", "C12", "Heisenberg27"]:
        assert fitting(cat(name)).is_whole()


@pytest.mark.parametrize("name", SMALL)
def test_fitting_matches_lattice_scan(name):
    g = cat(name)
    assert fitting(g) == largest_normal_nilpotent(g) == fitting_by_centralizers(g)


def test_predicates():
    assert is_quasinilpotent(cat("A5"))
    assert not is_quasinilpotent(cat("S3"))
    assert is_nilpotent(cat("D8")) and is_soluble(cat("S4"))
    assert not is_nilpotent(cat("S3")) and not is_soluble(cat("A5"))


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []


# --- generalised Fitting subgroup ----------------------------------------------------

def test_f_star_examples():
    assert f_star(cat("A5")).is_whole()
    s4 = cat("S4")
    assert f_star(s4) == socle(s4)
    assert f_star(cat("D16")).is_whole()


def test_f_star_oracle_examples():
    s5 = cat("S5")
    assert f_star_oracle(s5).order == 60
    assert f_star_oracle(cat("C1")).is_trivial()
    g = cat("S3xA5")
    value = f_star_oracle(g)
    assert value.order == 180 and value == f_star(g)


@pytest.mark.parametrize("name", SMALL)
def test_f_star_three_ways(name):
    g = cat(name)
    assert f_star(g) == f_star_oracle(g) == f_star_by_innerisers(g)


def test_f_star_by_innerisers_examples():
    assert f_star_by_innerisers(cat("S4")).order == 4
    assert f_star_by_innerisers(cat("A5")).is_whole()
    assert f_star_by_innerisers(cat("C1")).is_trivial()


def test_inneriser_examples():
    s3 = cat("S3")
    a3 = sub(s3, "(1 2 3)")
    assert inneriser(s3, Section(a3, s3.trivial())) == a3
    c6 = cat("C6")
    assert inneriser(c6, Section(c6.whole(), c6.trivial())).is_whole()
    s5 = cat("S5")
    a5 = [n for n in normal_lattice(s5) if n.order == 60][0]
    assert inneriser(s5, Section(a5, s5.trivial())) == a5


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "C2wrS3", "D12"])
def test_inneriser_is_element_filter(name):
    g = cat(name)
    for f in chief_series(g).factors():
        want = {x.array for x in g if brute_inner(x, f)}
        assert {p.array for p in inneriser(g, f).elements()} == want


# --- Frattini-based radicals -----------------------------------------------------------

def test_f_tilde_examples():
    assert f_tilde(cat("S5")).order == 60
    assert f_tilde(cat("Q8")).is_whole()
    assert f_tilde(cat("C1")).is_trivial()
    assert f_tilde_by_innerisers(cat("S4")).order == 4
    sl = cat("SL(2,3)")
    assert f_tilde_by_innerisers(sl).order == 8 == f_tilde(sl).order


@pytest.mark.parametrize("name", ["D8", "Q8", "C16", "Heisenberg27", "C4xC4"])
def test_f_tilde_of_nilpotent_group_is_whole(name):
    g = cat(name)
    assert f_tilde(g).is_whole() and f_tilde_by_innerisers(g).is_whole()


@pytest.mark.parametrize("name", SMALL)
def test_f_tilde_three_ways(name):
    g = cat(name)
    assert f_tilde(g) == f_tilde_forster(g) == f_tilde_by_innerisers(g)


def test_phi_pi_examples():
    q8 = cat("Q8")
    assert phi_pi(q8, {2}) == frattini(q8)
    assert phi_pi(q8, set()).is_trivial()
    assert phi_pi(cat("S4"), {2, 3}).is_trivial()
    assert phi_pi(cat("C9"), {3}).order == 3
    assert phi_pi(cat("C12"), {3}).is_trivial() and phi_pi(cat("C12"), {2}).order == 2


# --- general properties ---------------------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_sandwich_and_self_centralizing(name):
    g = cat(name)
    fit, fs, ft = fitting(g), f_star(g), f_tilde(g)
    assert fit <= fs <= ft
    assert centralizer(g, fs) <= fs and centralizer(g, ft) <= ft
    if is_soluble(g):
        assert fit == fs == ft


@pytest.mark.parametrize("name", ["S4", "S3xS3", "D12", "A4xC2", "SL(2,3)"])
def test_fitting_centralizer_contained_in_fitting_for_soluble(name):
    g = cat(name)
    assert centralizer(g, fitting(g)) <= fitting(g)


@pytest.mark.parametrize("name", ["S4", "D8", "C2wrS3", "S3xA5"])
def test_fitting_is_join_of_p_cores(name):
    g = cat(name)
    assert fitting(g) == join_all(g, (o_p(g, p) for p in prime_factors(g.order)))


def test_radical_lookup():
    r = radical(cat("S4"), "Fstar_innerisers")
    assert r.value.order == 4 and r.witness["chief_factor_orders"] == [4, 3, 2]
    with pytest.raises(GroupError, match="unknown radical"):
        radical(cat("S4"), "Nope")


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
def test_f_star_nontrivial_on_nontrivial_groups(entry):
    g = entry.load()
    assert f_star(g).is_trivial() == (g.order == 1)


@pytest.mark.parametrize("name", SMALL)
def test_fitting_modulo_frattini(name):
    from fittinglike.group import quotient
    from fittinglike.lattice import abelian_socle
    g = cat(name)
    phi = frattini(g)
    q = quotient(g, phi)
    pulled = q.preimage(fitting(q.target))
    assert pulled == fitting(g)
    assert pulled == q.preimage(abelian_socle(q.target))

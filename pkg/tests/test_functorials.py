import pytest

from fittinglike.catalog import CATALOG
from fittinglike.config import GroupError
from fittinglike.functorials import (
    Builtin,
    Circ,
    Join,
    Meet,
    Omega,
    Power,
    Star,
    check_axioms,
    evaluate,
    gamma_class_radical,
    omega,
    phi_pi,
    radical_class_membership,
    values_lattice,
)
from fittinglike.group import direct_product, quotient
from fittinglike.lattice import frattini, normal_lattice
from fittinglike.radicals import f_star, f_tilde, fitting

from conftest import cat, sub

F, FSTAR, FTILDE, PHI, TRIV, ID, SOC = (Builtin(n) for n in ("F", "Fstar", "Ftilde", "Phi", "Triv", "Id", "Soc"))
SMALL = [e.name for e in CATALOG if e.order <= 200]
FAMILY = [FSTAR, FTILDE, Star(phi_pi({2}), FSTAR), Star(phi_pi({3}), FSTAR)]


# --- evaluation --------------------------------------------------------------------

def test_star_of_trivial_frattini_collapses():
    s4 = cat("S4")
    assert evaluate(Star(PHI, FSTAR), s4) == f_star(s4)
    assert evaluate(Star(PHI, FSTAR), s4).order == 4


def test_star_matches_manual_preimage():
    g = cat("SL(2,3)")
    q = quotient(g, frattini(g))
    assert evaluate(Star(PHI, FSTAR), g) == q.preimage(f_star(q.target))
    assert evaluate(Star(PHI, FSTAR), g) == f_tilde(g)


def test_circ_evaluates_inside_the_left_value():
    s4 = cat("S4")
    # F*(S4) = V4, and F of V4 is V4
    assert evaluate(Circ(FSTAR, F), s4).order == 4
    # Soc of S4 is V4; Phi of V4 is trivial
    assert evaluate(Circ(SOC, PHI), s4).is_trivial()


def test_meet_join_and_constants():
    g = cat("S3xC2")
    assert evaluate(TRIV, g).is_trivial() and evaluate(ID, g).is_whole()
    assert evaluate(Meet((FSTAR, PHI)), g) == f_star(g) & frattini(g)
    assert evaluate(Join((F, SOC)), g).order == 6


def test_power_and_omega():
    sl = cat("SL(2,3)")
    value, steps = omega(FTILDE, sl)
    assert value.order == 8 and steps <= 2
    assert evaluate(Omega(FTILDE), sl) == value
    assert evaluate(Power(FTILDE, 1), sl) == f_tilde(sl)
    # Phi applied twice to C8 lands in the subgroup of order 2
    assert evaluate(Power(PHI, 2), cat("C8")).order == 2
    assert evaluate(Omega(PHI), cat("C8")).is_trivial()


@pytest.mark.parametrize("name", SMALL)
def test_phi_star_ftilde_is_ftilde(name):
    g = cat(name)
    assert evaluate(Star(PHI, FTILDE), g) == f_tilde(g)


def test_unknown_builtin_rejected():
    with pytest.raises(GroupError):
        Builtin("Nope")
    with pytest.raises(GroupError):
        Builtin("Phi", frozenset({2}))


# --- axioms ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_fstar_satisfies_all_axioms(name):
    assert check_axioms(FSTAR, cat(name)).passed


@pytest.mark.parametrize("name", SMALL)
def test_ftilde_satisfies_first_four_axioms(name):
    assert check_axioms(FTILDE, cat(name), ["F1", "F2", "F3", "F4"]).passed


@pytest.mark.parametrize("primes", [set(), {2}, {3}, {2, 3}], ids=str)
@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "Q8xC3", "D16", "C2wrS3", "A5", "C4wrC2"])
def test_phi_pi_star_fstar_satisfies_first_four_axioms(name, primes):
    g = cat(name)
    expr = Star(phi_pi(primes), FSTAR)
    assert check_axioms(expr, g, ["F1", "F2", "F3", "F4"]).passed
    assert f_star(g) <= evaluate(expr, g) <= f_tilde(g)


def test_trivial_functorial_fails_self_centralizing_with_witness():
    s3 = cat("S3")
    report = check_axioms(TRIV, s3, ["F3"])
    fail = report.failures()["F3"]
    assert fail.witness.is_whole()


def test_identity_functorial_fails_socle_bound_on_s4():
    report = check_axioms(ID, cat("S4"), ["F4"])
    assert not report.passed and report.failures()["F4"].witness.is_whole()


def test_fitting_fails_self_centralizing_on_a5():
    assert not check_axioms(F, cat("A5"), ["F3"]).passed


def test_unknown_axiom_rejected():
    with pytest.raises(GroupError):
        check_axioms(FSTAR, cat("S3"), ["F9"])


# --- lattice of values ------------------------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_value_family_is_distributive(name):
    assert values_lattice(cat(name), FAMILY).distributive


def test_single_member_family_and_one_point_lattice():
    assert values_lattice(cat("D12"), [FSTAR]).size == 1
    verdict = values_lattice(cat("S4"), FAMILY)
    assert verdict.distributive and verdict.size == 1


@pytest.mark.parametrize("name", SMALL)
def test_fstar_is_least_value(name):
    g = cat(name)
    for e in FAMILY:
        assert f_star(g) <= evaluate(e, g)


# --- radical classes --------------------------------------------------------------------

def test_class_membership_examples():
    assert radical_class_membership(FSTAR, cat("A5"))
    assert not radical_class_membership(FSTAR, cat("S3"))
    c1 = cat("C1")
    assert all(radical_class_membership(e, c1) for e in (FSTAR, FTILDE, F, TRIV))


def test_class_radical_of_s5_is_a5():
    assert gamma_class_radical(FSTAR, cat("S5")).order == 60


@pytest.mark.parametrize("name", ["S4", "S3xS3", "A4xC2", "SL(2,3)", "C2xA5", "C2wrS3"])
def test_class_radical_equals_value(name):
    g = cat(name)
    for e in (FSTAR, FTILDE):
        assert gamma_class_radical(e, g) == evaluate(e, g)


@pytest.mark.parametrize("pair", [("S3", "C4"), ("A4", "C3"), ("S3", "S3"), ("Q8", "S3")], ids="x".join)
def test_direct_product_law(pair):
    a, b = cat(pair[0]), cat(pair[1])
    dp = direct_product(a, b)
    for e in (FSTAR, FTILDE):
        want = dp.embedding(0, evaluate(e, a)) | dp.embedding(1, evaluate(e, b))
        assert evaluate(e, dp.group) == want

import pytest
from hypothesis import given, strategies as st

from fittinglike.config import GroupError
from fittinglike.perm import Permutation, compose, invert, parse_cycles

from conftest import all_permutations, brute_cayley, perm


def test_transposition_squared_is_identity():
    p = perm("(1 2)", 2)
    assert compose(p, p) == Permutation.identity(2)


def test_inverse_of_three_cycle():
    assert invert(perm("(1 2 3)", 3)) == perm("(1 3 2)", 3)


def test_compose_matches_brute_force_table_of_s3():
    elems = all_permutations(3)
    table = brute_cayley(elems)
    p, q = perm("(1 2 3)", 3), perm("(1 2)", 3)
    i, j = elems.index(p.array), elems.index(q.array)
    assert compose(p, q).array == elems[table[i][j]]


def test_left_to_right_action():
    p, q = perm("(1 2 3)", 3), perm("(1 2)", 3)
    # point 1 goes to 2 under p, then 2 goes to 1 under q
    assert compose(p, q)(1) == 1
    assert (p * q)(2) == q(p(2))


def test_degree_mismatch_rejected():
    with pytest.raises(GroupError):
        compose(perm("(1 2)", 2), perm("(1 2)", 3))


def test_cycle_string_round_trip():
    p = perm("(1 4)(2 3 5)", 6)
    assert str(p) == "(1 4)(2 3 5)"
    assert Permutation.from_cycles(str(p), 6) == p
    assert str(Permutation.identity(4)) == "()"


@pytest.mark.parametrize("text", ["(1 2 2)", "(1 2", "1 2)", "(0 1)", "(a b)", ""])
def test_malformed_cycles_rejected(text):
    with pytest.raises(GroupError):
        parse_cycles(text)


def test_point_beyond_degree_rejected():
    with pytest.raises(GroupError):
        perm("(1 5)", 3)


def test_order_is_lcm_of_cycle_lengths():
    assert perm("(1 2)(3 4 5)", 5).order() == 6


perms5 = st.permutations(list(range(5))).map(Permutation)


@given(perms5, perms5, perms5)
def test_composition_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms5)
def test_inverse_cancels(p):
    assert invert(p) * p == Permutation.identity(5)
    assert p * invert(p) == Permutation.identity(5)


@given(perms5, st.integers(-7, 7))
def test_power_agrees_with_repeated_product(p, k):
    q = Permutation.identity(5)
    base = p if k >= 0 else invert(p)
    for _ in range(abs(k)):
        q = q * base
    assert p ** k == q

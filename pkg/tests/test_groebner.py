import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from commvar.groebner import (BudgetExceeded, Ideal, buchberger, is_member, krull_dimension,
                              max_independent_set, monomial_dimension, reduce)
from commvar.ring import GF, QQ, polynomial_ring
from oracles import affine_dim_of_monomial_ideal
from strategies import RINGS, polynomials

R7 = RINGS["F7"]


def spoly(f, g):
    (lf, cf), (lg, cg) = f.leading_term(), g.leading_term()
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = f.ring.monomial([a - b for a, b in zip(L, lf)], f.ring.field.inv(cf))
    mg = g.ring.monomial([a - b for a, b in zip(L, lg)], g.ring.field.inv(cg))
    return mf * f - mg * g


def is_groebner(basis):
    return all(not reduce(spoly(f, g), basis) for f, g in itertools.combinations(basis, 2))


def test_lex_basis_of_linear_chain():
    R, (x, y, z) = polynomial_ring("x,y,z", order="lex")
    gb = buchberger(Ideal(R, (x - y, y - z)))
    assert set(gb.basis) == {x - z, y - z}


def test_division_remainder():
    R, (x, y) = polynomial_ring("x,y")
    assert reduce(x ** 2 * y - y, [x * y - 1]) == x - y


def test_unit_and_zero_ideals():
    R, (x, y) = polynomial_ring("x,y", field=GF(5))
    assert buchberger(Ideal(R, (x, x + 1))).is_unit_ideal()
    assert krull_dimension(Ideal(R, (x, x + 1))) == -1
    assert krull_dimension(Ideal(R, ())) == 2
    assert krull_dimension(Ideal(R, (x * y,))) == 1


def test_twisted_cubic_over_rationals():
    R, (x, y, z, w) = polynomial_ring("x,y,z,w", field=QQ)
    # 2x2 minors of [[x, y, z], [y, z, w]]
    I = Ideal(R, (x * z - y ** 2, x * w - y * z, y * w - z ** 2))
    assert krull_dimension(I) == 2
    assert is_groebner(list(buchberger(I).basis))


def test_budget_refusal():
    R, (x, y, z) = polynomial_ring("x,y,z")
    I = Ideal(R, (x ** 2 * y - z ** 2, x * z ** 2 - y ** 3 + x, y * z - x ** 3))
    with pytest.raises(BudgetExceeded):
        buchberger(I, budget=2)
    assert buchberger(I).contains(y * z - x ** 3)


def test_hitting_set_examples():
    assert max_independent_set([{0, 1}, {1, 2}], 3) == 2
    assert max_independent_set([{0}, {1}, {2}], 3) == 0
    assert max_independent_set([set()], 3) == -1
    assert monomial_dimension([(1, 1, 0, 0), (0, 0, 1, 1)], 4) == 2


@given(st.lists(st.tuples(*[st.integers(0, 2)] * 5), max_size=6))
def test_monomial_dimension_matches_exhaustive_search(monos):
    assert monomial_dimension(monos, 5) == affine_dim_of_monomial_ideal(monos, 5)


ideal_gens = st.lists(polynomials(R7, 3), min_size=1, max_size=3)


@given(gens=ideal_gens, data=st.data())
def test_reduced_basis_ignores_generator_order(gens, data):
    perm = data.draw(st.permutations(gens))
    assert buchberger(Ideal(R7, tuple(gens))).basis == buchberger(Ideal(R7, tuple(perm))).basis


@given(gens=ideal_gens)
def test_basis_is_groebner_and_contains_generators(gens):
    gb = buchberger(Ideal(R7, tuple(gens)))
    basis = list(gb.basis)
    assert is_groebner(basis)
    assert all(gb.contains(g) for g in gens)
    assert all(g.terms[g.leading_monomial()] == 1 for g in basis)


@given(gens=ideal_gens, extra=polynomials(R7, 3))
def test_dimension_is_monotone(gens, extra):
    I = Ideal(R7, tuple(gens))
    assert krull_dimension(I.with_generators([extra])) <= krull_dimension(I)


@given(gens=ideal_gens, f=polynomials(R7, 3), g=polynomials(R7, 3))
def test_membership_is_closed_under_combination(gens, f, g):
    I = Ideal(R7, tuple(gens))
    assert is_member(f * gens[0] + g * gens[-1], I)


@given(gens=ideal_gens)
def test_lex_and_grevlex_agree_on_dimension(gens):
    I = Ideal(R7, tuple(gens))
    lex = RINGS["F7lex"]
    assert krull_dimension(I) == krull_dimension(I.change_ring(lex))

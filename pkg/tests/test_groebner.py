from itertools import combinations
from math import comb

import pytest

from oracles import span_dim
from satbound.field import Field
from satbound.groebner import BudgetExceeded, groebner_basis, normal_form
from satbound.ideal import Ideal, graded_dim, hilbert_data, ideal_member
from satbound.ideal_ops import ideal_power, saturate
from satbound.poly import GREVLEX, LEX, Ring, mono_div, mono_lcm


@pytest.fixture
def R3():
    return Ring(["x", "y", "z"])


def spoly(f, g, order):
    lf, _ = f.leading(order)
    lg, _ = g.leading(order)
    L = mono_lcm(lf, lg)
    return f.monic(order).mul_monomial(mono_div(L, lf)) - g.monic(order).mul_monomial(mono_div(L, lg))


def assert_buchberger(gb):
    for f, g in combinations(gb.elements, 2):
        assert not gb.reduce(spoly(f, g, gb.order)).terms


def assert_reduced(gb):
    for i, g in enumerate(gb.elements):
        assert g.leading(gb.order)[1] == 1
        for j, lead in enumerate(gb.leads):
            if i == j:
                continue
            assert not any(all(a <= b for a, b in zip(lead, m)) for m in g.terms)


def test_small_groebner_basis(R3):
    x, y, z = R3.gens()
    gb = groebner_basis([x**2, x * y + y**2])
    assert set(gb.elements) == {x**2, x * y + y**2, y**3}
    assert_buchberger(gb)
    assert_reduced(gb)


def test_monomial_ideal_is_its_own_basis(R3):
    x, y, z = R3.gens()
    gens = [x * y, y * z, z * x]
    assert set(groebner_basis(gens).elements) == set(gens)


def test_principal_linear(R3):
    x, y, z = R3.gens()
    gb = groebner_basis([(x + y + z).scale(3)])
    assert gb.elements == [x + y + z]


def test_normal_form_examples(R3):
    x, y, z = R3.gens()
    G = groebner_basis([x * y, y * z, z * x])
    assert normal_form(x**3, G) == x**3
    assert not normal_form(x * y * z, G).terms
    assert not normal_form(x**2 * y, groebner_basis([x * y])).terms
    f = x**3 + x * y * z + y**3
    r = normal_form(f, G)
    assert normal_form(r, G) == r
    assert Ideal([x * y, y * z, z * x]).contains(f - r)


def test_ideal_member_examples(R3):
    x, y, z = R3.gens()
    I = Ideal([x * y, y * z, z * x])
    assert ideal_member(x * y * z, I)
    assert not ideal_member(x**3, I)
    ell = x + y + z
    J = Ideal([ell * x, ell * y, ell * z])
    assert ideal_member(ell, saturate(J))
    with pytest.raises(ValueError):
        ideal_member(x + y * y, I)


def test_graded_dim_examples(R3):
    x, y, z = R3.gens()
    I = Ideal([x * y, y * z, z * x])
    assert graded_dim(I, 2) == 3
    assert graded_dim(I, 3) == 7
    R5 = Ring(5)
    assert graded_dim(Ideal(R5.gens()), 1) == 5


def test_hilbert_data_examples(R3, corpus):
    x, y, z = R3.gens()
    h = hilbert_data(Ideal([x * y, y * z, z * x]), 10)
    assert [h.value(t) for t in range(1, 11)] == [3] * 10
    assert (h.dimension, h.degree) == (0, 3)
    tc = next(e for e in corpus if e.spec.name == "twisted_cubic").ideal
    h = hilbert_data(tc, 10)
    assert [h.value(t) for t in range(11)] == [3 * t + 1 for t in range(11)]
    assert (h.dimension, h.degree) == (1, 3)
    h = hilbert_data(Ideal([R3.one()]), 5)
    assert h.dimension == -1
    assert all(h.value(t) == 0 for t in range(6))


def test_hilbert_values_complement_graded_dim(corpus):
    for ex in corpus:
        I = ex.ideal
        h = I.hilbert_data(8)
        r = I.nvars - 1
        for t in range(9):
            assert h.value(t) + I.graded_dim(t) == comb(t + r, r)


def test_buchberger_criterion_on_corpus(corpus):
    for ex in corpus:
        for order in (GREVLEX, LEX):
            gb = ex.ideal.groebner(order)
            assert_buchberger(gb)
            assert_reduced(gb)


def test_graded_dim_is_order_independent(corpus):
    for ex in corpus:
        I = ex.ideal
        for t in range(11):
            assert I.graded_dim(t, GREVLEX) == I.graded_dim(t, LEX)


def test_graded_dim_matches_linear_algebra(corpus):
    """Standard-monomial counts agree with ranks of spanning sets of monomial multiples."""
    for ex in corpus:
        if ex.ring.nvars > 5:
            continue
        I = ideal_power(ex.ideal, 2) if ex.ring.nvars <= 3 else ex.ideal
        for t in range(7):
            assert I.graded_dim(t) == span_dim(list(I.gens), t, ex.ring.field.p)


def test_graded_dim_monotone_under_inclusion(corpus):
    for ex in corpus:
        I = ex.ideal
        small = ideal_power(I, 2)
        big = saturate(I)
        for t in range(9):
            assert small.graded_dim(t) <= I.graded_dim(t) <= big.graded_dim(t)


def test_groebner_over_rationals_matches_prime_field():
    for fld in (Field(), Field(0)):
        R = Ring(["x", "y", "z", "w"], fld)
        x, y, z, w = R.gens()
        gb = groebner_basis([x * z - y * y, x * w - y * z, y * w - z * z])
        assert sorted(gb.leads) == sorted([(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)])


def test_budget_is_enforced(R3):
    x, y, z = R3.gens()
    with pytest.raises(BudgetExceeded):
        groebner_basis([x**3 + y**2 * z, x * y**2 + z**3, y**3 + x**2 * z], budget=2)


def test_non_homogeneous_input_rejected(R3):
    x, y, z = R3.gens()
    with pytest.raises(ValueError):
        groebner_basis([x**2 + y])
    with pytest.raises(ValueError):
        Ideal([x**2 + y])

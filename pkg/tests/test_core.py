from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satbound.field import DEFAULT_PRIME, Field, field_from_spec
from satbound.poly import GREVLEX, LEX, MonomialOrder, ParseError, Polynomial, Ring

FIELDS = [Field(), Field(0), Field(5)]


def test_default_prime_is_prime_and_below_2_31():
    assert DEFAULT_PRIME < 2**31
    Field(DEFAULT_PRIME)


@pytest.mark.parametrize("p", [4, 1, 2**31 + 11, 2147483647 * 3])
def test_field_rejects_non_primes(p):
    with pytest.raises(ValueError):
        Field(p)


@pytest.mark.parametrize("fld", FIELDS, ids=repr)
def test_field_inverse_and_negation(fld):
    for a in (1, 2, 3, 4):
        x = fld(a)
        assert fld(x * fld.inv(x)) == fld(1)
        assert fld(x + fld.neg(x)) == fld(0)


def test_field_from_spec():
    assert field_from_spec("prime") == Field()
    assert field_from_spec("rat").p == 0
    assert field_from_spec("7").p == 7


def test_monomial_compare_examples():
    assert GREVLEX.compare((2, 0, 0), (1, 1, 0)) == 1
    assert LEX.compare((1, 0), (0, 10)) == 1
    assert GREVLEX.compare((0, 10), (1, 0)) == 1
    m = (1, 2, 3)
    for order in (GREVLEX, LEX, MonomialOrder("elim", split=1)):
        assert order.compare(m, m) == 0


def test_monomial_compare_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        GREVLEX.compare((1, 0), (1, 0, 0))


def test_grevlex_tiebreak_is_reverse_lex_on_last_variable():
    # same degree: the monomial with the smaller last exponent is bigger
    assert GREVLEX.compare((1, 0, 1), (0, 2, 0)) == -1
    assert GREVLEX.compare((0, 1, 1), (1, 0, 1)) == -1


def test_elimination_order_eliminates_leading_block():
    elim = MonomialOrder("elim", split=1)
    assert elim.compare((1, 0, 0), (0, 5, 5)) == 1


mono3 = st.tuples(*[st.integers(0, 6)] * 3)
ORDERS = [GREVLEX, LEX, MonomialOrder("elim", split=1), MonomialOrder("elim", split=2), MonomialOrder.grevlex_last(0, 3)]


@pytest.mark.parametrize("order", ORDERS, ids=repr)
@given(a=mono3, b=mono3, c=mono3)
def test_order_axioms(order, a, b, c):
    ab = order.compare(a, b)
    # totality and antisymmetry
    assert ab == -order.compare(b, a)
    assert (ab == 0) == (a == b)
    # multiplicativity
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert order.compare(ac, bc) == ab
    # 1 is minimal
    assert order.compare((0, 0, 0), a) <= 0
    # transitivity
    if ab >= 0 and order.compare(b, c) >= 0:
        assert order.compare(a, c) >= 0


@pytest.fixture(params=FIELDS, ids=repr)
def ring(request):
    return Ring(["x", "y", "z"], request.param)


def test_arith_examples(ring):
    x, y, z = ring.gens()
    assert (x + y) + (-x - y) == ring.zero()
    assert (x + y) * (x - y) == x**2 - y**2
    assert not (x + y - x - y).terms


def test_scale_over_f5():
    R = Ring(["x"], Field(5))
    x = R.gen(0)
    assert (x.scale(2)).terms == {(1,): 2}
    assert x.scale(5) == R.zero()


def test_field_mismatch_rejected():
    a = Ring(["x"], Field(5)).gen(0)
    b = Ring(["x"], Field(7)).gen(0)
    with pytest.raises(ValueError):
        a + b


def test_is_homogeneous():
    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    assert (x**2 + y * z).is_homogeneous() == (True, 2)
    assert (x**2 + y).is_homogeneous()[0] is False
    ell = x + y + z
    assert (x**2 * ell).is_homogeneous() == (True, 3)
    ok, deg = R.zero().is_homogeneous()
    assert ok and deg is None


def test_terms_sorted_descending():
    R = Ring(["x", "y", "z"])
    f = R.parse("z^2 + x*y + 3*x^2")
    keys = [GREVLEX.key(m) for m, _ in f.sorted_terms()]
    assert keys == sorted(keys, reverse=True)
    assert str(f) == "3*x^2 + x*y + z^2"


def test_parse_grammar():
    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    assert R.parse("x*y - 3*z^2") == x * y - z**2 * 3
    assert R.parse("2x y") == x * y * 2
    assert R.parse("(x+y)^2") == x**2 + x * y * 2 + y**2
    assert R.parse("-x") == -x


@pytest.mark.parametrize("text", ["x +", "x ^ y", "q*x", "(x", "x $ y", ""])
def test_parse_errors_report_columns(text):
    R = Ring(["x", "y", "z"])
    with pytest.raises(ParseError) as info:
        R.parse(text)
    assert info.value.col >= 1


coeff = st.integers(-20, 20)
poly_terms = st.dictionaries(mono3, coeff, max_size=6)


def _mk(R, terms):
    return Polynomial(R, {m: R.field(c) for m, c in terms.items()})


@pytest.mark.parametrize("fld", [Field(), Field(0)], ids=repr)
@given(a=poly_terms, b=poly_terms, c=poly_terms)
def test_ring_axioms(fld, a, b, c):
    R = Ring(["x", "y", "z"], fld)
    f, g, h = _mk(R, a), _mk(R, b), _mk(R, c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f
    assert f - f == R.zero()


@pytest.mark.parametrize("fld", [Field(), Field(0)], ids=repr)
@given(a=poly_terms)
def test_print_parse_round_trip(fld, a):
    R = Ring(["x", "y", "z"], fld)
    f = _mk(R, a)
    g = R.parse(str(f))
    assert g == f
    assert g.sorted_terms() == f.sorted_terms()


def test_exact_division():
    R = Ring(["x", "y"], Field(0))
    x, y = R.gens()
    assert ((x + y) * (x - y)).exact_div(x + y) == x - y
    with pytest.raises(ValueError):
        (x**2 + y**2).exact_div(x + y)


def test_rational_coefficients_are_fractions():
    R = Ring(["x"], Field(0))
    f = R.gen(0).scale(Fraction(1, 2))
    assert f.terms[(1,)] == Fraction(1, 2)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.dictionaries(mono3, fractions, max_size=5))
def test_rational_print_parse_round_trip(terms):
    R = Ring(["x", "y", "z"], Field(0))
    f = Polynomial(R, {m: R.field(c) for m, c in terms.items()})
    assert R.parse(str(f)) == f


def test_division_only_by_constants():
    R = Ring(["x", "y"], Field(7))
    x, y = R.gens()
    assert R.parse("x/2") * 2 == x
    with pytest.raises(ParseError):
        R.parse("x/y")
    with pytest.raises(ParseError):
        R.parse("x/0")

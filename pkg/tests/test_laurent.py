from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hw, poly
from superweyl import CharacterPoly, HalfWeight, add, coefficient, dim_eval, exact_divide, mono, mul
from superweyl.errors import DivisionByZero, NotDivisible, NotIntegral, RankMismatch
from superweyl.laurent import render

t1 = mono(hw(1, 0, 0))
t2 = mono(hw(0, 1, 0))
t3 = mono(hw(0, 0, 1))


def test_halfweight_basics():
    w = HalfWeight.of([Fraction(1, 2), "-1/2", 3])
    assert w.doubled == (1, -1, 6)
    assert w.rank == 3
    assert not w.is_integral()
    assert str(w) == "(1/2,-1/2,3)"
    assert (w + w).integer_coords() == (1, -1, 6)
    with pytest.raises(NotIntegral):
        w.integer_coords()
    assert HalfWeight((2, 0)) == hw(1, 0)
    assert hw(1, 2).pair((3, -1)) == 1


def test_halfweight_rejects_empty():
    with pytest.raises(ValueError):
        HalfWeight(())


# mono


def test_mono_examples():
    assert mono(HalfWeight((4, 0))).terms == {(4, 0): 1}
    assert mono(HalfWeight.zero(2)) == CharacterPoly.one(2)
    assert mono(HalfWeight((1, -1))).terms == {(1, -1): 1}
    assert render(mono(HalfWeight((1, -1)))) == "t1^(1/2)*t2^(-1/2)"


# add


def test_add_examples():
    a = mono(hw(1, 0))
    b = mono(hw(0, 1))
    assert add(a, -a).is_zero()
    assert add(a, b).terms == {(2, 0): 1, (0, 2): 1}
    assert add(a, CharacterPoly.zero(2)) == a


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        add(mono(hw(1)), mono(hw(1, 0)))
    with pytest.raises(RankMismatch):
        mul(mono(hw(1)), mono(hw(1, 0)))
    with pytest.raises(RankMismatch):
        coefficient(mono(hw(1)), hw(1, 0))


def test_zero_coefficients_dropped():
    p = CharacterPoly({(2,): 0, (0,): 3}, 1)
    assert p.terms == {(0,): 3}


# mul


def test_mul_examples():
    a = mono(hw(1, 0))
    b = mono(hw(0, 1))
    assert mul(a - b, a + b) == poly(2, {(2, 0): 1, (0, 2): -1})
    assert mul(a + b, CharacterPoly.one(2)) == a + b
    half = mono(HalfWeight((1, 0)))
    assert mul(half, half) == a


# exact_divide


def test_divide_examples():
    a = mono(hw(1, 0))
    b = mono(hw(0, 1))
    assert exact_divide(a * a - b * b, a - b) == a + b
    p = a * a + 3 * b
    assert exact_divide(p, CharacterPoly.one(2)) == p
    with pytest.raises(NotDivisible):
        exact_divide(a + b, a - b)
    with pytest.raises(DivisionByZero):
        exact_divide(a, CharacterPoly.zero(2))


def test_divide_by_monomial_and_zero_dividend():
    a = mono(hw(1, 0))
    b = mono(hw(0, 1))
    assert exact_divide(a * b, b) == a
    assert exact_divide(CharacterPoly.zero(2), a - b).is_zero()


def test_divide_long_quotient():
    # quotient with more terms than |p| * |q| would allow
    x = mono(hw(1))
    one = CharacterPoly.one(1)
    q = one - x
    p = one - x**12
    assert exact_divide(p, q) == sum((x**k for k in range(1, 12)), one)


# dim_eval / coefficient


def test_dim_eval_examples():
    assert dim_eval(t1 + t2) == 2
    assert dim_eval(CharacterPoly.zero(3)) == 0
    one = CharacterPoly.one(3)
    # eight monomials by hand; t3 occurs twice
    prod = (t1 + t2) * (one + mono(hw(-1, 0, 1))) * (one + mono(hw(0, -1, 1)))
    assert len(prod) == 7
    assert dim_eval(prod) == 8


def test_coefficient_examples():
    a = mono(hw(1, 0, 0))
    b = mono(hw(0, 1, 0))
    assert coefficient(a + b, hw(1, 0, 0)) == 1
    assert coefficient(a + b, hw(0, 0, 1)) == 0
    assert coefficient(2 * mono(hw(1, 1)), hw(1, 1)) == 2


def test_render_order():
    p = t1 + 2 * t3 + mono(hw(-1, 0, 2))
    assert render(p) == "t1^-1*t3^2 + 2*t3 + t1"
    assert render(-t1) == "-t1"
    assert render(CharacterPoly.zero(2)) == "0"
    assert render(CharacterPoly.one(2)) == "1"


def test_records_sorted_and_roundtrip():
    p = t1 + 2 * t3 - mono(HalfWeight((1, -1, 0)))
    recs = p.to_records()
    assert [r["doubled"] for r in recs] == sorted(r["doubled"] for r in recs)
    assert CharacterPoly.from_records(recs, 3) == p


# properties

RANK = 2


@st.composite
def polys(draw, max_terms=20):
    n = draw(st.integers(0, max_terms))
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(-5, 5)] * RANK),
            st.integers(-4, 4).filter(bool),
            max_size=n,
        )
    )
    return poly(RANK, terms)


@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p


@given(polys(8), polys(8), polys(8))
def test_mul_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(polys(8), polys(8))
def test_division_completeness(q, r):
    if q.is_zero():
        return
    assert exact_divide(q * r, q) == r


@given(polys(8), polys(8))
def test_division_soundness(p, q):
    if q.is_zero():
        return
    try:
        r = exact_divide(p, q)
    except NotDivisible:
        return
    assert q * r == p


@given(polys(10), polys(10))
def test_dim_eval_homomorphism(p, q):
    assert dim_eval(p * q) == dim_eval(p) * dim_eval(q)
    assert dim_eval(p + q) == dim_eval(p) + dim_eval(q)


@given(polys(10))
def test_records_roundtrip_property(p):
    assert CharacterPoly.from_records(p.to_records(), RANK) == p

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from riordan.errors import (
    ContextMismatchError,
    ExactDivisionError,
    NotAUnitError,
    TruncationError,
    ZeroSeriesError,
)
from riordan.rings import ring_from_tag
from riordan.series import Series
from strategies import term_dicts, unit_series_values

ZZ = ring_from_tag("int")
QQ = ring_from_tag("rational")
F7 = ring_from_tag("modp:7")


def from_dict(terms, dim, trunc, ring=ZZ):
    return Series(dim, trunc, ring, terms)


def as_dict(s):
    return {m: c for m, c in s._terms.items()}


# -- constructor contract ------------------------------------------------------


def test_constructor_rejects_terms_above_truncation():
    with pytest.raises(TruncationError):
        Series(2, 2, ZZ, {(2, 1): 1})


def test_constructor_prunes_zeros_and_coerces():
    s = Series(2, 3, F7, {(1, 0): 7, (0, 1): 8})
    assert s.support() == ((0, 1),)
    assert s.coeff((0, 1)) == 1
    assert s.coeff((1, 0)) == 0


def test_constructor_rejects_duplicates():
    with pytest.raises(ValueError):
        Series(1, 3, ZZ, [((1,), 1), ((1,), 2)])


def test_coeff_above_truncation_raises():
    s = Series(1, 3, ZZ, {(1,): 1})
    with pytest.raises(TruncationError):
        s.coeff((4,))


def test_context_mismatch_is_rejected():
    a = Series(1, 3, ZZ, {(1,): 1})
    with pytest.raises(ContextMismatchError):
        a + Series(1, 3, QQ, {(1,): 1})
    with pytest.raises(ContextMismatchError):
        a * Series(1, 4, ZZ, {(1,): 1})
    with pytest.raises(ContextMismatchError):
        a + Series(2, 3, ZZ, {(1, 0): 1})


# -- arithmetic against the naive oracle ----------------------------------------


@given(a=term_dicts(2, 5), b=term_dicts(2, 5))
def test_mul_matches_naive_convolution(a, b):
    sa, sb = from_dict(a, 2, 5), from_dict(b, 2, 5)
    expected = naive.poly_mul(as_dict(sa), as_dict(sb), 5)
    assert as_dict(sa * sb) == expected


@given(a=term_dicts(3, 4), b=term_dicts(3, 4))
def test_mul_matches_naive_convolution_3d(a, b):
    sa, sb = from_dict(a, 3, 4), from_dict(b, 3, 4)
    expected = naive.poly_mul(as_dict(sa), as_dict(sb), 4)
    assert as_dict(sa * sb) == expected


@given(a=term_dicts(2, 6), b=term_dicts(2, 6))
def test_add_matches_naive(a, b):
    sa, sb = from_dict(a, 2, 6), from_dict(b, 2, 6)
    assert as_dict(sa + sb) == naive.poly_add(as_dict(sa), as_dict(sb))
    assert sa - sb == sa + (-sb)


@given(a=term_dicts(2, 4), e=st.integers(min_value=0, max_value=4))
def test_pow_matches_naive(a, e):
    sa = from_dict(a, 2, 4)
    assert as_dict(sa**e) == naive.poly_pow(as_dict(sa), e, 2, 4)


@given(a=term_dicts(2, 5), b=term_dicts(2, 5), c=term_dicts(2, 5))
def test_ring_laws_hold_for_series(a, b, c):
    for ring in (ZZ, F7):
        sa, sb, sc = (from_dict(t, 2, 5, ring) for t in (a, b, c))
        assert sa * sb == sb * sa
        assert (sa * sb) * sc == sa * (sb * sc)
        assert sa * (sb + sc) == sa * sb + sa * sc
        assert sa + (-sa) == Series.zero(2, 5, ring)


def test_scale():
    s = Series(1, 3, ZZ, {(1,): 2})
    assert s.scale(3) == Series(1, 3, ZZ, {(1,): 6})
    assert s.scale(0).is_zero


# -- units and inversion ---------------------------------------------------------


def test_geometric_inverse_1d():
    one_minus_x = Series(1, 5, ZZ, {(0,): 1, (1,): -1})
    assert as_dict(one_minus_x.inverse()) == {(t,): 1 for t in range(6)}


def test_geometric_inverse_2d_matches_oracle():
    s = Series(2, 3, ZZ, {(0, 0): 1, (1, 0): -1, (0, 1): -1})
    assert as_dict(s.inverse()) == naive.geometric_expansion(2, 3)


def test_alternating_inverse():
    s = Series(1, 3, ZZ, {(0,): 1, (1,): 1})
    assert as_dict(s.inverse()) == {(0,): 1, (1,): -1, (2,): 1, (3,): -1}


def test_unit_criterion_per_ring():
    assert not Series(1, 2, ZZ, {(0,): 2}).is_unit()
    assert Series(1, 2, QQ, {(0,): 2}).is_unit()
    assert Series(1, 2, F7, {(0,): 2}).is_unit()
    assert not Series(1, 2, ZZ, {(1,): 1}).is_unit()
    with pytest.raises(NotAUnitError):
        Series(1, 2, ZZ, {(1,): 1}).inverse()


@given(u=unit_series_values(2, 5, ZZ))
def test_inverse_multiplies_back_to_one(u):
    assert u * u.inverse() == Series.one(2, 5, ZZ)
    assert u.inverse() * u == Series.one(2, 5, ZZ)


@given(u=unit_series_values(2, 4, F7))
def test_inverse_multiplies_back_to_one_modp(u):
    assert u * u.inverse() == Series.one(2, 4, F7)


def test_rational_inverse_with_fraction_constant():
    s = Series(1, 2, QQ, {(0,): 2, (1,): 1})
    inv = s.inverse()
    assert inv.coeff((0,)) == Fraction(1, 2)
    assert inv.coeff((1,)) == Fraction(-1, 4)
    assert inv.coeff((2,)) == Fraction(1, 8)


# -- vertex and monomial division -------------------------------------------------


def test_vertex_and_factor_out():
    s = Series(2, 5, ZZ, {(2, 1): 3, (3, 2): -1})
    assert s.vertex() == (2, 1)
    v, h = s.factor_out_vertex()
    assert v == (2, 1)
    assert h == Series(2, 2, ZZ, {(0, 0): 3, (1, 1): -1})
    with pytest.raises(ZeroSeriesError):
        Series.zero(2, 5, ZZ).vertex()


def test_div_by_monomial():
    s = Series(2, 4, ZZ, {(2, 1): 3, (3, 1): -1})
    q = s.div_by_monomial((1, 1))
    assert q == Series(2, 2, ZZ, {(1, 0): 3, (2, 0): -1})
    with pytest.raises(ExactDivisionError):
        s.div_by_monomial((0, 2))


@given(a=term_dicts(2, 4))
def test_mul_by_monomial_is_lossless(a):
    s = from_dict(a, 2, 4)
    raised = s.mul_by_monomial((1, 2))
    assert raised.trunc == 7
    assert raised.div_by_monomial((1, 2)) == s


def test_lower_truncation():
    s = Series(1, 4, ZZ, {(0,): 1, (3,): 2, (4,): 5})
    low = s.lower_truncation(2)
    assert low == Series(1, 2, ZZ, {(0,): 1})
    with pytest.raises(TruncationError):
        s.lower_truncation(5)


# -- text and payloads -------------------------------------------------------------


def test_str_renders_signs():
    s = Series(2, 3, ZZ, {(0, 0): 1, (2, 0): -1, (1, 1): 2})
    assert str(s) == "1 - x1^2 + 2*x1*x2"
    assert str(Series.zero(1, 2, ZZ)) == "0"
    assert str(Series(1, 2, ZZ, {(1,): -3})) == "-3*x1"


def test_payload_round_trip(any_ring):
    s = Series(2, 3, any_ring, {(0, 0): 2, (1, 1): -3})
    back = Series.from_payload(s.to_payload())
    assert back == s
    assert Series.from_json(s.to_json()) == s


def test_payload_is_grlex_sorted_and_stable():
    s = Series(2, 2, ZZ, {(0, 1): 1, (2, 0): 1, (0, 0): 1})
    payload = s.to_payload()
    assert [t["e"] for t in payload["terms"]] == [[0, 0], [0, 1], [2, 0]]
    assert s.to_json() == Series.from_json(s.to_json()).to_json()


# -- truncation is a hard boundary ---------------------------------------------------


@given(a=term_dicts(2, 5), b=term_dicts(2, 5))
def test_products_never_smuggle_higher_terms(a, b):
    p = from_dict(a, 2, 5) * from_dict(b, 2, 5)
    assert all(sum(m) <= 5 for m in p.support())


@given(a=term_dicts(2, 6))
def test_lowering_commutes_with_multiplication(a):
    s = from_dict(a, 2, 6)
    t = Series(2, 6, ZZ, {(1, 0): 1, (0, 0): 1})
    assert (s * t).lower_truncation(3) == s.lower_truncation(3) * t.lower_truncation(3)

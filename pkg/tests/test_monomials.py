from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan.errors import ExactDivisionError
from riordan.monomials import (
    MAX_EXPONENT,
    basis_index,
    check_monomial,
    degree,
    divides,
    enumerate_box,
    enumerate_upto,
    format_monomial,
    grlex_cmp,
    grlex_key,
    hcf,
    inf_signed,
    mono_mul,
    mono_one,
    parse_monomial,
    quotient,
)

small_monos = st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=4).map(tuple)


def same_dim_pairs(max_dim=4):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda d: st.tuples(
            st.lists(st.integers(0, 8), min_size=d, max_size=d).map(tuple),
            st.lists(st.integers(0, 8), min_size=d, max_size=d).map(tuple),
        )
    )


def test_basics():
    assert mono_one(3) == (0, 0, 0)
    assert degree((2, 0, 1)) == 3
    assert mono_mul((1, 2), (3, 0)) == (4, 2)
    assert quotient((4, 2), (1, 2)) == (3, 0)
    assert hcf((2, 5), (3, 1)) == (2, 1)
    assert inf_signed((-2, 5), (3, -1)) == (-2, -1)


def test_check_monomial_rejects():
    with pytest.raises(ValueError):
        check_monomial((1, 2), 3)
    with pytest.raises(ValueError):
        check_monomial((-1, 2), 2)  # signed needs the flag
    check_monomial((-1, 2), 2, signed=True)
    with pytest.raises(ValueError):
        check_monomial((1.5, 2), 2)


def test_overflow_guard():
    with pytest.raises(OverflowError):
        mono_mul((MAX_EXPONENT - 1,), (2,))


def test_divides_and_quotient():
    assert divides((1, 0), (2, 3))
    assert not divides((3, 0), (2, 3))
    with pytest.raises(ExactDivisionError):
        quotient((2, 3), (3, 0))


def test_grlex_is_degree_major():
    assert grlex_cmp((0, 2), (1, 0)) > 0  # degree wins
    assert grlex_cmp((1, 1), (2, 0)) > 0  # same degree: earlier-variable power first
    assert grlex_cmp((1, 1), (1, 1)) == 0


def test_enumerate_upto_counts_and_order():
    for d in (1, 2, 3):
        for k in (0, 1, 4):
            basis = enumerate_upto(d, k)
            assert len(basis) == comb(d + k, d)
            keys = [grlex_key(m) for m in basis]
            assert keys == sorted(keys)
            assert len(set(basis)) == len(basis)
    assert enumerate_upto(2, 2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def test_basis_index_inverts_enumeration():
    basis = enumerate_upto(3, 5)
    index = basis_index(3, 5)
    for i, m in enumerate(basis):
        assert index[m] == i


def test_enumerate_box():
    box = enumerate_box((-1, 0), (1, 1))
    assert set(box) == {(a, b) for a in (-1, 0, 1) for b in (0, 1)}
    assert len(box) == 6
    with pytest.raises(ValueError):
        enumerate_box((1, 0), (0, 1))


def test_format_and_parse():
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((1, 0, 3)) == "x1*x3^3"
    assert format_monomial((-2, 1)) == "x1^-2*x2"
    for m in ((0, 0), (1, 2), (5, 0, 1)):
        assert parse_monomial(format_monomial(m), len(m)) == m
    assert parse_monomial("x1^-2*x2", 2, signed=True) == (-2, 1)
    with pytest.raises(ValueError):
        parse_monomial("x9", 2)


@given(pair=same_dim_pairs())
def test_grlex_total_order(pair):
    m, n = pair
    c = grlex_cmp(m, n)
    assert c == -grlex_cmp(n, m)
    assert (c == 0) == (m == n)
    if degree(m) < degree(n):
        assert c < 0


@given(pair=same_dim_pairs())
def test_product_laws(pair):
    m, n = pair
    p = mono_mul(m, n)
    assert degree(p) == degree(m) + degree(n)
    assert divides(m, p) and divides(n, p)
    assert quotient(p, m) == n
    h = hcf(m, n)
    assert divides(h, m) and divides(h, n)


@given(pair=same_dim_pairs())
def test_grlex_is_multiplicative(pair):
    m, n = pair
    if m == n:
        return
    lower, higher = (m, n) if grlex_cmp(m, n) < 0 else (n, m)
    bump = (1,) + (0,) * (len(m) - 1)
    assert grlex_cmp(mono_mul(lower, bump), mono_mul(higher, bump)) < 0

import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from riordan.errors import ContextMismatchError
from riordan.formal_maps import FormalMap
from riordan.matrices import (
    MonomialMatrix,
    homomorphism_check,
    injectivity_probe,
    reconstruct,
    riordan_matrix,
)
from riordan.parser import parse_series
from riordan.riordan import RiordanElement
from riordan.rings import ring_from_tag
from riordan.series import Series
from strategies import invertible_map_values, unit_series_values

ZZ = ring_from_tag("int")
F7 = ring_from_tag("modp:7")


def elements(dim, trunc, ring):
    return st.tuples(
        unit_series_values(dim, trunc, ring), invertible_map_values(dim, trunc, ring)
    ).map(lambda fg: RiordanElement(*fg))


def pascal_element(trunc, ring=ZZ):
    f = parse_series("1/(1-x1)", 1, trunc, ring)
    g = FormalMap([parse_series("x1/(1-x1)", 1, trunc, ring)])
    return RiordanElement(f, g)


# -- the matrix is what it says ----------------------------------------------------


@given(a=elements(2, 4, ZZ))
def test_columns_are_f_times_monomials_in_g(a):
    mat = riordan_matrix(a)
    for n in mat.basis:
        expected = a.f
        for j, e in enumerate(n):
            if e:
                expected = expected * a.g.components[j] ** e
        assert mat.column_series(n) == expected


def test_pascal_matrix_matches_recurrence_oracle():
    mat = riordan_matrix(pascal_element(8))
    rows = naive.pascal_rows(8)
    for m in range(9):
        for n in range(9):
            want = rows[m][n] if n <= m else 0
            assert mat.entry((m,), (n,)) == want


@given(a=elements(2, 4, ZZ))
def test_matrix_is_graded_triangular(a):
    assert riordan_matrix(a).is_graded_triangular()


@given(a=elements(2, 4, ZZ), b=elements(2, 4, ZZ))
def test_product_becomes_matrix_product(a, b):
    assert homomorphism_check(a, b)
    assert riordan_matrix(a * b) == riordan_matrix(a) @ riordan_matrix(b)


@given(a=elements(2, 4, F7), b=elements(2, 4, F7))
def test_product_becomes_matrix_product_modp(a, b):
    assert homomorphism_check(a, b)


@given(a=elements(2, 4, ZZ))
def test_matrix_of_inverse_multiplies_to_identity(a):
    ident = MonomialMatrix.identity(2, 4, ZZ)
    m, mi = riordan_matrix(a), riordan_matrix(a.inverse())
    assert m @ mi == ident and mi @ m == ident


def test_identity_matrix():
    e = RiordanElement.identity(2, 3, ZZ)
    assert riordan_matrix(e) == MonomialMatrix.identity(2, 3, ZZ)


# -- reconstruction -----------------------------------------------------------------


@given(a=elements(2, 4, ZZ))
def test_reconstruct_inverts_riordan_matrix(a):
    assert reconstruct(riordan_matrix(a)) == a


@given(a=elements(2, 3, ZZ), b=elements(2, 3, ZZ))
def test_injectivity_probe(a, b):
    if a == b:
        assert not injectivity_probe(a, b)
    else:
        assert injectivity_probe(a, b)


# -- serialization ------------------------------------------------------------------


def test_csv_round_trip_is_byte_exact(any_ring):
    mat = riordan_matrix(
        RiordanElement(
            Series(2, 3, any_ring, {(0, 0): 1, (1, 0): -2}),
            FormalMap(
                [
                    Series(2, 3, any_ring, {(1, 0): 1, (0, 2): 3}),
                    Series(2, 3, any_ring, {(0, 1): 1, (1, 1): -1}),
                ]
            ),
        )
    )
    text = mat.to_csv()
    back = MonomialMatrix.from_csv(text, any_ring)
    assert back == mat
    assert back.to_csv() == text


def test_csv_corner_and_labels():
    mat = riordan_matrix(pascal_element(2))
    lines = mat.to_csv().splitlines()
    assert lines[0] == "m\\n,1,x1,x1^2"
    assert lines[1] == "1,1,0,0"
    assert lines[2] == "x1,1,1,0"
    assert lines[3] == "x1^2,1,2,1"


def test_json_round_trip_is_byte_exact(any_ring):
    mat = riordan_matrix(
        RiordanElement(
            Series(1, 4, any_ring, {(0,): 1, (1,): 5}),
            FormalMap([Series(1, 4, any_ring, {(1,): 1, (2,): -3})]),
        )
    )
    text = mat.to_json()
    back = MonomialMatrix.from_json(text)
    assert back == mat
    assert back.to_json() == text


def test_matmul_requires_matching_context():
    a = MonomialMatrix.identity(2, 3, ZZ)
    b = MonomialMatrix.identity(2, 2, ZZ)
    with pytest.raises(ContextMismatchError):
        a @ b

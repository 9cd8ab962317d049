import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan.errors import NotInvertibleError
from riordan.formal_maps import FormalMap, compose_series
from riordan.parser import parse_series
from riordan.riordan import RiordanElement
from riordan.rings import ring_from_tag
from riordan.series import Series
from strategies import (
    invertible_map_values,
    series_values,
    unit_series_values,
    zero_constant_series,
)

ZZ = ring_from_tag("int")
F7 = ring_from_tag("modp:7")


def elements(dim, trunc, ring):
    return st.tuples(
        unit_series_values(dim, trunc, ring), invertible_map_values(dim, trunc, ring)
    ).map(lambda fg: RiordanElement(*fg))


def semigroup_elements(dim, trunc, ring):
    """No invertibility constraints at all."""
    return st.tuples(
        series_values(dim, trunc, ring),
        st.lists(zero_constant_series(dim, trunc, ring), min_size=dim, max_size=dim),
    ).map(lambda fg: RiordanElement(fg[0], FormalMap(fg[1])))


def test_pascal_element_acts_as_binomial_transform():
    f = parse_series("1/(1-x1)", 1, 6, ZZ)
    g = FormalMap([parse_series("x1/(1-x1)", 1, 6, ZZ)])
    pascal = RiordanElement(f, g)
    u = Series(1, 6, ZZ, {(t,): 1 for t in range(7)})  # 1/(1-x)
    out = pascal.apply(u)
    assert [out.coeff((t,)) for t in range(7)] == [2**t for t in range(7)]


def test_apply_is_multiplication_after_substitution():
    f = Series(2, 3, ZZ, {(0, 0): 1, (1, 0): 2})
    g = FormalMap(
        [Series(2, 3, ZZ, {(1, 0): 1, (1, 1): 1}), Series(2, 3, ZZ, {(0, 1): 1})]
    )
    a = RiordanElement(f, g)
    u = Series(2, 3, ZZ, {(1, 1): 3, (0, 0): -1})
    assert a.apply(u) == f * compose_series(u, g)


@given(a=elements(2, 4, ZZ), b=elements(2, 4, ZZ), c=elements(2, 4, ZZ))
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(a=semigroup_elements(2, 4, ZZ), b=semigroup_elements(2, 4, ZZ))
def test_product_action_is_composition_of_actions(a, b):
    """(a*b).apply == a.apply . b.apply, with no invertibility anywhere."""
    u = Series(2, 4, ZZ, {(0, 0): 1, (1, 0): 1, (0, 1): -2, (2, 1): 3})
    assert (a * b).apply(u) == a.apply(b.apply(u))


@given(a=elements(2, 4, ZZ))
def test_identity_laws(a):
    e = RiordanElement.identity(2, 4, ZZ)
    assert a * e == a and e * a == a


@given(a=elements(2, 4, ZZ))
def test_inverse_round_trips(a):
    e = RiordanElement.identity(2, 4, ZZ)
    inv = a.inverse()
    assert a * inv == e and inv * a == e
    assert inv.inverse() == a


@given(a=elements(2, 3, F7), b=elements(2, 3, F7))
def test_inverse_is_antihomomorphic(a, b):
    assert (a * b).inverse() == b.inverse() * a.inverse()


def test_non_invertible_elements_are_rejected():
    f_nonunit = Series(1, 3, ZZ, {(0,): 2})
    g_ok = FormalMap([Series(1, 3, ZZ, {(1,): 1})])
    a = RiordanElement(f_nonunit, g_ok)
    assert not a.is_invertible()
    with pytest.raises(NotInvertibleError):
        a.inverse()
    f_ok = Series(1, 3, ZZ, {(0,): 1})
    g_singular = FormalMap([Series(1, 3, ZZ, {(2,): 1})])
    b = RiordanElement(f_ok, g_singular)
    assert not b.is_invertible()
    with pytest.raises(NotInvertibleError):
        b.inverse()


@given(a=elements(2, 4, ZZ), b=elements(2, 4, ZZ))
def test_appell_and_lagrange_subgroups_are_closed(a, b):
    ident_map = FormalMap.identity(2, 4, ZZ)
    one = Series.one(2, 4, ZZ)
    appell_a = RiordanElement(a.f, ident_map)
    appell_b = RiordanElement(b.f, ident_map)
    assert (appell_a * appell_b).is_appell()
    assert appell_a.inverse().is_appell()
    lagrange_a = RiordanElement(one, a.g)
    lagrange_b = RiordanElement(one, b.g)
    assert (lagrange_a * lagrange_b).is_lagrange()
    assert lagrange_a.inverse().is_lagrange()


def test_pascal_inverse_is_signed_pascal():
    f = parse_series("1/(1-x1)", 1, 5, ZZ)
    g = FormalMap([parse_series("x1/(1-x1)", 1, 5, ZZ)])
    inv = RiordanElement(f, g).inverse()
    assert inv.f == parse_series("1/(1+x1)", 1, 5, ZZ)
    assert inv.g.components[0] == parse_series("x1/(1+x1)", 1, 5, ZZ)


def test_payload_round_trip(any_ring):
    f = Series(2, 3, any_ring, {(0, 0): 1, (1, 0): 2})
    g = FormalMap(
        [Series(2, 3, any_ring, {(1, 0): 1}), Series(2, 3, any_ring, {(0, 1): 1, (2, 0): 1})]
    )
    a = RiordanElement(f, g)
    assert RiordanElement.from_payload(a.to_payload()) == a

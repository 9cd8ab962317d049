from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan.errors import ContextMismatchError, ExactDivisionError, NotAUnitError
from riordan.rings import IntegerRing, PrimeFieldRing, RationalRing, ring_from_tag

ints = st.integers(min_value=-50, max_value=50)


def test_ring_from_tag():
    assert isinstance(ring_from_tag("int"), IntegerRing)
    assert isinstance(ring_from_tag("rational"), RationalRing)
    ring = ring_from_tag("modp:7")
    assert isinstance(ring, PrimeFieldRing) and ring.p == 7
    with pytest.raises(ValueError):
        ring_from_tag("modp:6")
    with pytest.raises(ValueError):
        ring_from_tag("float")
    with pytest.raises(ValueError):
        ring_from_tag("modp:x")


def test_equality_is_by_tag():
    assert ring_from_tag("modp:7") == ring_from_tag("modp:7")
    assert ring_from_tag("modp:7") != ring_from_tag("modp:5")
    assert ring_from_tag("int") != ring_from_tag("rational")
    assert hash(ring_from_tag("modp:7")) == hash(ring_from_tag("modp:7"))
    with pytest.raises(ContextMismatchError):
        ring_from_tag("int").require_same(ring_from_tag("rational"))


def test_integer_units():
    ring = ring_from_tag("int")
    assert ring.is_unit(1) and ring.is_unit(-1)
    assert not ring.is_unit(0) and not ring.is_unit(2)
    assert ring.inverse(-1) == -1
    with pytest.raises(NotAUnitError):
        ring.inverse(2)


def test_integer_exact_div():
    ring = ring_from_tag("int")
    assert ring.exact_div(12, -4) == -3
    with pytest.raises(ExactDivisionError):
        ring.exact_div(7, 2)
    with pytest.raises(ExactDivisionError):
        ring.exact_div(7, 0)


def test_rational_format_is_always_a_slash_b():
    ring = ring_from_tag("rational")
    assert ring.format(ring.coerce(2)) == "2/1"
    assert ring.format(ring.parse("4/6")) == "2/3"
    assert ring.format(ring.parse("-4/6")) == "-2/3"
    assert ring.format(ring.parse("3/-6")) == "-1/2"
    assert ring.format(ring.zero) == "0/1"


def test_rational_parse_rejects_garbage():
    ring = ring_from_tag("rational")
    with pytest.raises(ValueError):
        ring.parse("1/0")
    with pytest.raises(ValueError):
        ring.parse("a/b")
    with pytest.raises(ValueError):
        ring.coerce(0.5)


def test_modp_reduction_and_inverse():
    ring = ring_from_tag("modp:7")
    assert ring.coerce(-1) == 6
    assert ring.finalize(50) == 1
    assert ring.mul(3, 5) == 1
    for a in range(1, 7):
        assert ring.mul(a, ring.inverse(a)) == 1
    with pytest.raises(NotAUnitError):
        ring.inverse(0)
    with pytest.raises(NotAUnitError):
        ring.inverse(14)


def test_bool_is_not_a_coefficient(any_ring):
    with pytest.raises(ValueError):
        any_ring.coerce(True)


def test_format_parse_round_trip(any_ring):
    for raw in (-7, -1, 0, 1, 2, 13):
        v = any_ring.coerce(raw)
        assert any_ring.parse(any_ring.format(v)) == v


@given(a=ints, b=ints, c=ints)
def test_ring_laws(a, b, c):
    for tag in ("int", "rational", "modp:7"):
        ring = ring_from_tag(tag)
        x, y, z = ring.coerce(a), ring.coerce(b), ring.coerce(c)
        assert ring.add(x, y) == ring.add(y, x)
        assert ring.mul(x, y) == ring.mul(y, x)
        assert ring.add(ring.add(x, y), z) == ring.add(x, ring.add(y, z))
        assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
        assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
        assert ring.add(x, ring.neg(x)) == ring.zero
        assert ring.mul(x, ring.one) == x
        assert ring.sub(x, y) == ring.add(x, ring.neg(y))


@given(a=ints, b=ints.filter(lambda v: v))
def test_rational_matches_fraction(a, b):
    ring = ring_from_tag("rational")
    v = ring.exact_div(ring.coerce(a), ring.coerce(b))
    assert v == Fraction(a, b)
    assert ring.format(v) == f"{Fraction(a, b).numerator}/{Fraction(a, b).denominator}"


@given(a=ints)
def test_modp_matches_reduction(a):
    ring = ring_from_tag("modp:7")
    assert ring.coerce(a) == a % 7

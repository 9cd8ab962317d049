import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from riordan.errors import ExprSyntaxError, NotAUnitError
from riordan.parser import evaluate, parse, parse_series, render
from riordan.rings import ring_from_tag
from riordan.series import Series

ZZ = ring_from_tag("int")
QQ = ring_from_tag("rational")
F7 = ring_from_tag("modp:7")

# canonical fully parenthesized renders, frozen byte for byte
GOLDEN_RENDERS = [
    ("1+2*x1^2", 2, "(1 + (2 * (x1^2)))"),
    ("1/(1-x1)", 1, "(1 / (1 - x1))"),
    ("  x1 + x2*x3 ", 3, "(x1 + (x2 * x3))"),
    ("-x1^2", 1, "(-(x1^2))"),
    ("(1+x1)^2 - 1 - 2*x1", 1, "((((1 + x1)^2) - 1) - (2 * x1))"),
    ("1 - x1 - x2", 2, "((1 - x1) - x2)"),
    ("x1*x2*x3", 3, "((x1 * x2) * x3)"),
    ("2^3", 1, "(2^3)"),
    ("-(1+x1)", 1, "(-(1 + x1))"),
    ("1/2/3", 1, "((1 / 2) / 3)"),
    ("1-2-3", 1, "((1 - 2) - 3)"),
    ("((x1))", 1, "x1"),
    ("0", 1, "0"),
    ("-0", 1, "(-0)"),
    ("x1^0", 1, "(x1^0)"),
    ("1+x1*x2^2-3", 2, "((1 + (x1 * (x2^2))) - 3)"),
    ("(x1+x2)^4", 2, "((x1 + x2)^4)"),
    ("1/(1-x1-x2)", 2, "(1 / ((1 - x1) - x2))"),
    ("--x1", 1, "(-(-x1))"),
    ("-x1*x2", 2, "((-x1) * x2)"),
    ("3*-2", 1, "(3 * (-2))"),
    ("x1/(1+x1)", 1, "(x1 / (1 + x1))"),
    ("(1-x1)^3*(1+x1)", 1, "(((1 - x1)^3) * (1 + x1))"),
    ("12+x10", 10, "(12 + x10)"),
]

# syntax diagnostics with byte offsets, frozen byte for byte
GOLDEN_SYNTAX_ERRORS = [
    ("x3", 2, "variable x3 out of range for dimension 2 (at byte 0)"),
    ("1 +", 1, "unexpected end of expression (at byte 3)"),
    ("x1 x2", 2, "unexpected 'x' after a complete expression (at byte 3)"),
    ("x1^-2", 1, "exponents must be non-negative integers (at byte 3)"),
    ("x1^2^3", 1, "powers do not chain; parenthesize the base (at byte 4)"),
    ("x", 1, "expected a variable index after 'x' (at byte 1)"),
    ("(1+x1", 1, "expected ')' (at byte 5)"),
    ("", 1, "unexpected end of expression (at byte 0)"),
    ("x0", 1, "variable x0 out of range for dimension 1 (at byte 0)"),
    ("*x1", 1, "unexpected '*' (at byte 0)"),
    ("café", 1, "unexpected 'c' (at byte 0)"),
    ("1 + é", 1, "unexpected 'é' (at byte 4)"),
]

GOLDEN_UNIT_ERRORS = [
    ("1/(x1+x2)", "cannot divide by (x1 + x2): its value has constant term 0, not a unit over int"),
    ("1/x1", "cannot divide by x1: its value has constant term 0, not a unit over int"),
    ("1/2", "cannot divide by 2: its value has constant term 2, not a unit over int"),
]


@pytest.mark.parametrize("text,dim,want", GOLDEN_RENDERS, ids=[c[0] for c in GOLDEN_RENDERS])
def test_golden_renders(text, dim, want):
    assert render(parse(text, dim)) == want


@pytest.mark.parametrize("text,dim,want", GOLDEN_RENDERS, ids=[c[0] for c in GOLDEN_RENDERS])
def test_canonical_form_reparses_to_itself(text, dim, want):
    assert render(parse(want, dim)) == want


@pytest.mark.parametrize(
    "text,dim,message", GOLDEN_SYNTAX_ERRORS, ids=[repr(c[0]) for c in GOLDEN_SYNTAX_ERRORS]
)
def test_golden_syntax_errors(text, dim, message):
    with pytest.raises(ExprSyntaxError) as err:
        parse(text, dim)
    assert str(err.value) == message


@pytest.mark.parametrize("text,message", GOLDEN_UNIT_ERRORS, ids=[c[0] for c in GOLDEN_UNIT_ERRORS])
def test_golden_non_unit_divisors(text, message):
    with pytest.raises(NotAUnitError) as err:
        parse_series(text, 2, 4, ZZ)
    assert str(err.value) == message


def test_offsets_are_bytes_not_codepoints():
    with pytest.raises(ExprSyntaxError) as err:
        parse("é + *", 1)  # 'é' is 2 bytes, rejected immediately
    assert "(at byte 0)" in str(err.value)


# -- evaluation ----------------------------------------------------------------


def test_precedence_golden():
    s = parse_series("1+2*x1^2", 2, 4, ZZ)
    assert s == Series(2, 4, ZZ, {(0, 0): 1, (2, 0): 2})


def test_binomial_cancellation():
    s = parse_series("(1+x1)^2 - 1 - 2*x1", 1, 4, ZZ)
    assert s == Series(1, 4, ZZ, {(2,): 1})


def test_geometric_series():
    s = parse_series("1/(1-x1)", 1, 3, ZZ)
    assert s == Series(1, 3, ZZ, {(t,): 1 for t in range(4)})


def test_two_variable_geometric_all_coefficients():
    """1/(1 - x1 - x2) at order 5: every coefficient is a multinomial number."""
    s = parse_series("1/(1-x1-x2)", 2, 5, ZZ)
    oracle = naive.geometric_expansion(2, 5)
    monomials = [(i, j) for i in range(6) for j in range(6) if i + j <= 5]
    assert len(monomials) == 21
    for m in monomials:
        assert s.coeff(m) == oracle.get(m, 0) == naive.multinomial(m)


def test_division_by_a_unit_series():
    s = parse_series("x1/(1+x1)", 1, 5, QQ)
    assert s == Series(1, 5, QQ, {(t,): (-1) ** (t + 1) for t in range(1, 6)})


def test_rational_constants_divide():
    s = parse_series("1/2", 1, 2, QQ)
    assert s == Series(1, 2, QQ, {(0,): "1/2"})
    t = parse_series("1/2", 1, 2, F7)
    assert t == Series(1, 2, F7, {(0,): 4})  # 2 * 4 = 8 = 1 mod 7


def test_unary_minus_binds_tighter_than_product():
    assert parse_series("-x1*x2", 2, 3, ZZ) == Series(2, 3, ZZ, {(1, 1): -1})
    assert parse_series("-x1^2", 1, 3, ZZ) == Series(1, 3, ZZ, {(2,): -1})


def test_high_powers_truncate_cleanly():
    s = parse_series("(x1+x2)^4", 2, 3, ZZ)
    assert s.is_zero
    t = parse_series("(1+x1)^9", 1, 2, ZZ)
    assert t == Series(1, 2, ZZ, {(0,): 1, (1,): 9, (2,): 36})


def test_variable_range_is_checked_at_parse_time():
    # no evaluation context needed to reject x3 in dimension 2
    with pytest.raises(ExprSyntaxError):
        parse("0*x3", 2)


@given(
    coeffs=st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    exponent=st.integers(0, 3),
)
def test_evaluate_respects_the_algebra(coeffs, exponent):
    """Evaluating text equals composing Series operations directly."""
    text = "+".join(f"{c}*x1^{i}" if i else f"{c}" for i, c in enumerate(coeffs))
    base = parse_series(text, 1, 4, ZZ)
    want = Series(1, 4, ZZ, {(i,): c for i, c in enumerate(coeffs) if c and i <= 4})
    assert base == want
    assert parse_series(f"({text})^{exponent}", 1, 4, ZZ) == base ** exponent


def test_render_evaluate_commutes():
    for text, dim, _ in GOLDEN_RENDERS:
        tree = parse(text, dim)
        direct = evaluate(tree, dim, 4, QQ)
        via_render = parse_series(render(tree), dim, 4, QQ)
        assert direct == via_render

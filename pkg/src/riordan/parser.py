"""Expression text for series: parse, render, evaluate.

The grammar turns strings like ``1/(1-x1-x2)`` into exact series
values.  It is deliberately small:

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" uint)?
    atom   := uint | "x" uint | "(" expr ")" | "-" factor

Whitespace is insignificant.  Juxtaposition is not multiplication, so
``2x1`` is a syntax error; powers do not chain, so ``x1^2^3`` is one
too.  Exponents are non-negative integers: negative powers belong to
the Laurent layer, which builds its values from an explicit vertex and
a body expression instead of extending this grammar.

Evaluation is exact in the truncated series algebra; division inverts
the denominator and therefore requires it to be a unit, reporting the
offending subexpression in canonical form when it is not.  Rendering
parenthesizes every operation, so ``render(parse(t))`` reparses to an
identical tree; that canonical form is the wire format echoed in
errors and reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExprSyntaxError, NotAUnitError
from .rings import Ring
from .series import Series


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


class _Cursor:
    """Scanner over the source text, reporting positions as byte offsets."""

    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def fail(self, message: str) -> "ExprSyntaxError":
        return ExprSyntaxError(message, self.offset())

    def take_uint(self, what: str) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail(f"expected {what}")
        return int(self.text[start : self.pos], 10)


def parse(text: str, dim: int):
    """Parse an expression over ``x1 .. x{dim}`` into a tree.

    Malformed text raises :class:`ExprSyntaxError` carrying the byte
    offset of the first offending character; out-of-range variables are
    rejected here too, since the dimension is part of the grammar.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive int, got {dim!r}")
    cur = _Cursor(text)
    node = _parse_expr(cur, dim)
    cur.skip_ws()
    if cur.peek():
        raise cur.fail(f"unexpected {cur.peek()!r} after a complete expression")
    return node


def _parse_expr(cur: _Cursor, dim: int):
    node = _parse_term(cur, dim)
    while True:
        cur.skip_ws()
        op = cur.peek()
        if op == "+":
            cur.pos += 1
            node = Add(node, _parse_term(cur, dim))
        elif op == "-":
            cur.pos += 1
            node = Sub(node, _parse_term(cur, dim))
        else:
            return node


def _parse_term(cur: _Cursor, dim: int):
    node = _parse_factor(cur, dim)
    while True:
        cur.skip_ws()
        op = cur.peek()
        if op == "*":
            cur.pos += 1
            node = Mul(node, _parse_factor(cur, dim))
        elif op == "/":
            cur.pos += 1
            node = Div(node, _parse_factor(cur, dim))
        else:
            return node


def _parse_factor(cur: _Cursor, dim: int):
    node = _parse_atom(cur, dim)
    cur.skip_ws()
    if cur.peek() == "^":
        cur.pos += 1
        cur.skip_ws()
        if cur.peek() == "-":
            raise cur.fail("exponents must be non-negative integers")
        e = cur.take_uint("a non-negative integer exponent")
        node = Pow(node, e)
        cur.skip_ws()
        if cur.peek() == "^":
            raise cur.fail("powers do not chain; parenthesize the base")
    return node


def _parse_atom(cur: _Cursor, dim: int):
    cur.skip_ws()
    ch = cur.peek()
    if ch == "(":
        cur.pos += 1
        node = _parse_expr(cur, dim)
        cur.skip_ws()
        if cur.peek() != ")":
            raise cur.fail("expected ')'")
        cur.pos += 1
        return node
    if ch == "-":
        cur.pos += 1
        return Neg(_parse_factor(cur, dim))
    if ch == "x":
        at = cur.offset()
        cur.pos += 1
        if not cur.peek().isdigit():
            raise cur.fail("expected a variable index after 'x'")
        idx = cur.take_uint("a variable index")
        if not 1 <= idx <= dim:
            raise ExprSyntaxError(
                f"variable x{idx} out of range for dimension {dim}", at
            )
        return Var(idx)
    if ch.isdigit():
        return IntLit(cur.take_uint("an integer"))
    if ch == "":
        raise cur.fail("unexpected end of expression")
    raise cur.fail(f"unexpected {ch!r}")


def render(node) -> str:
    """Canonical fully parenthesized form; reparses to the same tree."""
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Neg):
        return f"(-{render(node.operand)})"
    if isinstance(node, Add):
        return f"({render(node.left)} + {render(node.right)})"
    if isinstance(node, Sub):
        return f"({render(node.left)} - {render(node.right)})"
    if isinstance(node, Mul):
        return f"({render(node.left)} * {render(node.right)})"
    if isinstance(node, Div):
        return f"({render(node.left)} / {render(node.right)})"
    if isinstance(node, Pow):
        return f"({render(node.base)}^{node.exponent})"
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node, dim: int, trunc: int, ring: Ring) -> Series:
    """Evaluate a tree to an exact element of the truncated algebra.

    Division inverts the denominator, so a non-unit denominator raises
    :class:`NotAUnitError` naming the rendered subexpression.
    """
    if isinstance(node, IntLit):
        return Series.constant(dim, trunc, ring, node.value)
    if isinstance(node, Var):
        return Series.variable(dim, trunc, ring, node.index)
    if isinstance(node, Neg):
        return -evaluate(node.operand, dim, trunc, ring)
    if isinstance(node, Add):
        return evaluate(node.left, dim, trunc, ring) + evaluate(node.right, dim, trunc, ring)
    if isinstance(node, Sub):
        return evaluate(node.left, dim, trunc, ring) - evaluate(node.right, dim, trunc, ring)
    if isinstance(node, Mul):
        return evaluate(node.left, dim, trunc, ring) * evaluate(node.right, dim, trunc, ring)
    if isinstance(node, Div):
        num = evaluate(node.left, dim, trunc, ring)
        den = evaluate(node.right, dim, trunc, ring)
        if not den.is_unit():
            raise NotAUnitError(
                f"cannot divide by {render(node.right)}: its value has constant "
                f"term {ring.format(den.constant_term())}, not a unit over {ring.tag}"
            )
        return num * den.inverse()
    if isinstance(node, Pow):
        return evaluate(node.base, dim, trunc, ring) ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")


def parse_series(text: str, dim: int, trunc: int, ring: Ring) -> Series:
    """Parse and evaluate in one step."""
    return evaluate(parse(text, dim), dim, trunc, ring)

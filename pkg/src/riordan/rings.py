"""Coefficient rings.

A ring is a small context object that interprets plain Python values:
``int`` for the integers, :class:`gmpy2.mpq` for the rationals, and
integers reduced into ``[0, p)`` for the field of ``p`` elements.  Hot
loops run directly on the values with native operators and call
:meth:`Ring.finalize` once per accumulated result; that call is the
identity everywhere except the modular ring, where it performs the
reduction.  This keeps coefficient arithmetic exact and cheap.

Rings compare equal by tag, so two independently constructed ``modp:7``
contexts are interchangeable while ``modp:5`` values can never leak
into a ``modp:7`` container.
"""

from __future__ import annotations

from typing import Any

import gmpy2
from gmpy2 import mpq

from .errors import ContextMismatchError, ExactDivisionError, NotAUnitError

Value = Any  # int or mpq depending on the ring


class Ring:
    """Abstract coefficient ring over plain Python values."""

    tag: str
    zero: Value
    one: Value

    # -- element construction ------------------------------------------------

    def coerce(self, x: Value | int | str) -> Value:
        """Map an int, a decimal string, or a native value into the ring."""
        raise NotImplementedError

    def finalize(self, x: Value) -> Value:
        """Canonicalize a value produced by native ``+``/``*`` arithmetic."""
        raise NotImplementedError

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: Value, b: Value) -> Value:
        return self.finalize(a + b)

    def sub(self, a: Value, b: Value) -> Value:
        return self.finalize(a - b)

    def mul(self, a: Value, b: Value) -> Value:
        return self.finalize(a * b)

    def neg(self, a: Value) -> Value:
        return self.finalize(-a)

    # -- units and division --------------------------------------------------

    def is_unit(self, a: Value) -> bool:
        raise NotImplementedError

    def inverse(self, a: Value) -> Value:
        raise NotImplementedError

    def exact_div(self, a: Value, b: Value) -> Value:
        """Return ``q`` with ``q*b == a``, or raise :class:`ExactDivisionError`."""
        raise NotImplementedError

    # -- text form -------------------------------------------------------------

    def format(self, a: Value) -> str:
        raise NotImplementedError

    def parse(self, s: str) -> Value:
        raise NotImplementedError

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return f"<ring {self.tag}>"

    def require_same(self, other: "Ring") -> None:
        if self != other:
            raise ContextMismatchError(
                f"ring mismatch: {self.tag} vs {other.tag}"
            )


def _parse_int(s: str) -> int:
    s = s.strip()
    try:
        return int(s, 10)
    except ValueError:
        raise ValueError(f"not a decimal integer: {s!r}") from None


class IntegerRing(Ring):
    """The rational integers."""

    tag = "int"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool):
            raise ValueError("bool is not an integer coefficient")
        if isinstance(x, int):
            return x
        if isinstance(x, str):
            return _parse_int(x)
        raise ValueError(f"cannot coerce {x!r} into {self.tag}")

    def finalize(self, x):
        return x

    def is_unit(self, a):
        return a == 1 or a == -1

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnitError(f"{a} is not a unit in {self.tag}")
        return a

    def exact_div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b}")
        return q

    def format(self, a):
        return str(a)

    def parse(self, s):
        return _parse_int(s)


class RationalRing(Ring):
    """The rationals, backed by gmpy2 for speed."""

    tag = "rational"
    zero = mpq(0)
    one = mpq(1)

    def coerce(self, x):
        if isinstance(x, bool):
            raise ValueError("bool is not a rational coefficient")
        if isinstance(x, (int, type(mpq(0)))):
            return mpq(x)
        if isinstance(x, str):
            return self.parse(x)
        raise ValueError(f"cannot coerce {x!r} into {self.tag}")

    def finalize(self, x):
        # native mpq arithmetic already normalizes; ints appear only as
        # untouched accumulator zeros
        return x if isinstance(x, type(mpq(0))) else mpq(x)

    def is_unit(self, a):
        return a != 0

    def inverse(self, a):
        if a == 0:
            raise NotAUnitError("0 is not a unit in rational")
        return 1 / mpq(a)

    def exact_div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero")
        return mpq(a) / mpq(b)

    def format(self, a):
        # always a/b, lowest terms, positive denominator
        return f"{a.numerator}/{a.denominator}"

    def parse(self, s):
        s = s.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            d = _parse_int(den)
            if d == 0:
                raise ValueError(f"zero denominator: {s!r}")
            return mpq(_parse_int(num), d)
        return mpq(_parse_int(s))


class PrimeFieldRing(Ring):
    """Integers modulo a prime ``p``, stored reduced into ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        if not gmpy2.is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p
        self.tag = f"modp:{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, bool):
            raise ValueError("bool is not a modular coefficient")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return _parse_int(x) % self.p
        raise ValueError(f"cannot coerce {x!r} into {self.tag}")

    def finalize(self, x):
        return x % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inverse(self, a):
        if a % self.p == 0:
            raise NotAUnitError(f"0 is not a unit in {self.tag}")
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        if b % self.p == 0:
            raise ExactDivisionError("division by zero")
        return a * pow(b, -1, self.p) % self.p

    def format(self, a):
        return str(a)

    def parse(self, s):
        return _parse_int(s) % self.p


_INT = IntegerRing()
_RATIONAL = RationalRing()


def ring_from_tag(tag: str) -> Ring:
    """Build a ring from its textual tag: ``int``, ``rational``, ``modp:<p>``."""
    if tag == "int":
        return _INT
    if tag == "rational":
        return _RATIONAL
    if tag.startswith("modp:"):
        return PrimeFieldRing(_parse_int(tag[len("modp:"):]))
    raise ValueError(f"unknown ring tag: {tag!r}")

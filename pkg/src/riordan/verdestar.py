"""Laurent series with support bounded below, and the group built on them.

A :class:`LaurentSeries` represents an element of the algebra of formal
series whose support (a set of integer exponent vectors) is bounded
below in every coordinate.  Each value is stored in normalized form

    x^vertex_exp * body

where ``body`` is an ordinary truncated :class:`~riordan.series.Series`
whose support has componentwise infimum zero.  Because the vertex can
shift under arithmetic, a single global truncation order is not a sound
bookkeeping device here; instead every value carries its own *accuracy*
window, and every observation either falls inside the window or raises
:class:`~riordan.errors.AccuracyError`.

The window contract
-------------------

A value with vertex ``v``, body ``h`` and accuracy ``o`` asserts, for
every signed exponent vector ``m`` with ``deg(m - v) <= o``:

* if ``m >= v`` componentwise, the coefficient at ``m`` equals the body
  coefficient at ``m - v``;
* otherwise the coefficient at ``m`` is zero.

Nothing is asserted outside that set, and :meth:`LaurentSeries.coeff_at`
refuses to answer there.  Addition, multiplication, inversion and
composition each compute the largest window the operand windows
support; in particular renormalizing after a cancellation shrinks the
window by the degree of the shift, which is exactly what keeps the
claims true.  Coefficients are never silently wrong: they are exact or
they are errors.

The group
---------

Tuples of unit series act by the substitution ``x_j -> x_j * f_j``
(:func:`k_map`); these maps are closed under composition and inverse,
and monomials with negative exponents can be substituted through them
because each component is invertible in the Laurent algebra
(:func:`compose_signed`).  A pair of a unit Laurent series and such a
tuple forms a group under

    (f, g) * (f', g') = (f * (f' o g), second slot by convention)

where the second slot composes the substitution maps.  Two orders are
in circulation for that slot; both are implemented and named by what
they do:

* ``left-into-right``: substitute the left factor's map into the right
  factor's map.  This matches the pair product used by
  :class:`~riordan.riordan.RiordanElement` and is the order under which
  the windowed matrix representation turns products into matrix
  products.
* ``right-into-left``: the mirrored order.  The evidence harness can
  run under either convention and records which one satisfies the
  matrix identity.

The matrix representation indexes rows and columns by signed exponent
vectors inside a finite box; :func:`window_matrix` materializes it and
:func:`conjecture_trial` compares a product's matrix against the banded
product of the factors' matrices, certifying exactly those entries
whose inner sums are provably complete.  Inputs to the harness are
treated as exact data: the finitely many stored coefficients are the
whole value, which is what the random generators produce.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import monomials
from .errors import (
    AccuracyError,
    ContextMismatchError,
    InternalCheckError,
    NotAUnitError,
    TruncationError,
)
from .formal_maps import FormalMap, PowerTables, compose_series
from .monomials import (
    Monomial,
    check_monomial,
    degree,
    enumerate_box,
    format_monomial,
    mono_one,
)
from .rings import Ring
from .series import Series

# second-slot composition conventions for the pair product
LEFT_INTO_RIGHT = "left-into-right"
RIGHT_INTO_LEFT = "right-into-left"
CONVENTIONS = (LEFT_INTO_RIGHT, RIGHT_INTO_LEFT)

# cap on verbatim mismatch records per trial report; the full count is
# always reported, this only bounds the echoed entries
_MISMATCH_RECORD_CAP = 16


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(
            f"unknown convention {convention!r}; expected one of {CONVENTIONS}"
        )


def _mono_add(m: Monomial, n: Monomial) -> Monomial:
    return monomials.mono_mul(m, n)


def _mono_sub(m: Monomial, n: Monomial) -> Monomial:
    return monomials.mono_mul(m, tuple(-e for e in n))


class LaurentSeries:
    """A windowed Laurent series ``x^vertex_exp * body``."""

    __slots__ = ("dim", "ring", "vertex_exp", "body")

    def __init__(self, vertex_exp: Monomial, body: Series):
        if not isinstance(body, Series):
            raise TypeError(f"expected a Series body, got {type(body).__name__}")
        vertex_exp = tuple(vertex_exp)
        check_monomial(vertex_exp, body.dim, signed=True)
        if not body.is_zero:
            w = body.vertex()
            if w != mono_one(body.dim):
                # renormalize: the window shrinks by the degree of the
                # shift, which is what keeps the claims sound
                vertex_exp = _mono_add(vertex_exp, w)
                _, body = body.factor_out_vertex()
        self.dim = body.dim
        self.ring = body.ring
        self.vertex_exp = vertex_exp
        self.body = body

    # -- construction -----------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, accuracy: int, ring: Ring, vertex_exp: Monomial | None = None) -> "LaurentSeries":
        if vertex_exp is None:
            vertex_exp = mono_one(dim)
        return cls(vertex_exp, Series.zero(dim, accuracy, ring))

    @classmethod
    def one(cls, dim: int, accuracy: int, ring: Ring) -> "LaurentSeries":
        return cls(mono_one(dim), Series.one(dim, accuracy, ring))

    @classmethod
    def monomial(cls, dim: int, accuracy: int, ring: Ring, m: Monomial, c=1) -> "LaurentSeries":
        """The exact value ``c * x^m`` for a signed exponent vector ``m``."""
        return cls(tuple(m), Series.constant(dim, accuracy, ring, c))

    @classmethod
    def from_series(cls, s: Series) -> "LaurentSeries":
        """Embed an ordinary truncated series as a window of itself."""
        return cls(mono_one(s.dim), s)

    @classmethod
    def from_terms(cls, dim: int, accuracy: int, ring: Ring, terms) -> "LaurentSeries":
        """Normalize a finite signed term map into vertex-times-body form.

        The vertex is the componentwise infimum of the support.  Every
        term must fall inside the window ``deg(m - vertex) <= accuracy``;
        an outlier raises :class:`TruncationError` rather than being
        dropped, because dropping it would misrepresent exact input.
        """
        items = terms.items() if isinstance(terms, dict) else list(terms)
        clean = {}
        for m, c in items:
            m = tuple(m)
            check_monomial(m, dim, signed=True)
            v = ring.coerce(c)
            if v:
                if m in clean:
                    raise ValueError(f"duplicate exponent vector {m!r}")
                clean[m] = v
        if not clean:
            return cls.zero(dim, accuracy, ring)
        it = iter(clean)
        vertex = next(it)
        for m in it:
            vertex = monomials.inf_signed(vertex, m)
        shifted = {}
        for m, c in clean.items():
            o = _mono_sub(m, vertex)
            if degree(o) > accuracy:
                raise TruncationError(
                    f"term at {format_monomial(m)} lies {degree(o)} above the vertex, "
                    f"beyond the requested accuracy {accuracy}"
                )
            shifted[o] = c
        return cls(vertex, Series._raw(dim, accuracy, ring, shifted))

    # -- inspection -------------------------------------------------------------

    @property
    def accuracy(self) -> int:
        """Degree (above the vertex) up to which coefficients are exact."""
        return self.body.trunc

    @property
    def is_zero(self) -> bool:
        """True when the window holds no nonzero coefficient."""
        return self.body.is_zero

    def coeff_at(self, m: Monomial):
        """Exact coefficient at the signed exponent vector ``m``.

        Raises :class:`AccuracyError` when ``m`` falls outside the
        window; inside it, exponents below the vertex in some coordinate
        are exactly zero.
        """
        m = tuple(m)
        check_monomial(m, self.dim, signed=True)
        o = _mono_sub(m, self.vertex_exp)
        if degree(o) > self.accuracy:
            raise AccuracyError(
                f"coefficient at {format_monomial(m)} lies {degree(o)} above the "
                f"vertex, beyond accuracy {self.accuracy}"
            )
        if any(e < 0 for e in o):
            return self.ring.zero
        return self.body.coeff(o)

    def known_terms(self) -> tuple:
        """(signed exponent vector, coefficient) pairs in window order."""
        v = self.vertex_exp
        return tuple((_mono_add(v, o), c) for o, c in self.body.terms_sorted())

    def __eq__(self, other: object) -> bool:
        """Equality of windows: same vertex, same accuracy, same body.

        Two windows that would agree on a common sub-window but differ
        in extent are distinct observations and compare unequal.
        """
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.vertex_exp == other.vertex_exp and self.body == other.body

    __hash__ = None

    def _check_context(self, other: "LaurentSeries") -> None:
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"expected a LaurentSeries, got {type(other).__name__}")
        self.ring.require_same(other.ring)
        if self.dim != other.dim:
            raise ContextMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        """Sum on the largest window both operand windows support.

        The common vertex is the infimum of the two vertices; each
        operand's window, re-centered there, shrinks by the degree of
        its shift, and the result window is the smaller of the two.
        """
        self._check_context(other)
        w = monomials.inf_signed(self.vertex_exp, other.vertex_exp)
        acc = min(
            self.accuracy + degree(self.vertex_exp) - degree(w),
            other.accuracy + degree(other.vertex_exp) - degree(w),
        )
        ring = self.ring
        out = {}
        for src in (self, other):
            for m, _ in src.known_terms():
                o = _mono_sub(m, w)
                if degree(o) > acc or o in out:
                    continue
                c = ring.add(self.coeff_at(m), other.coeff_at(m))
                if c:
                    out[o] = c
        return LaurentSeries(w, Series._raw(self.dim, acc, ring, out))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.vertex_exp, -self.body)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        """Product: vertices add, bodies multiply, windows intersect."""
        self._check_context(other)
        acc = min(self.accuracy, other.accuracy)
        body = self.body.lower_truncation(acc) * other.body.lower_truncation(acc)
        return LaurentSeries(_mono_add(self.vertex_exp, other.vertex_exp), body)

    def __pow__(self, e: int) -> "LaurentSeries":
        if not isinstance(e, int):
            raise ValueError(f"powers take int exponents, got {e!r}")
        base = self if e >= 0 else self.inverse()
        out = LaurentSeries.one(self.dim, base.accuracy, self.ring)
        for _ in range(abs(e)):
            out = out * base
        return out

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries(self.vertex_exp, self.body.scale(c))

    # -- units ------------------------------------------------------------------

    def is_unit(self) -> bool:
        """Invertible iff the coefficient at the vertex is a ring unit.

        The coefficient at the vertex is the body's constant term; a
        value like ``x1 + x2``, whose vertex carries coefficient zero,
        is correctly rejected.
        """
        return self.ring.is_unit(self.body.constant_term())

    def inverse(self) -> "LaurentSeries":
        """Reciprocal: the vertex negates and the body inverts."""
        if not self.is_unit():
            raise NotAUnitError(
                "the coefficient at the vertex is "
                f"{self.ring.format(self.body.constant_term())}, not a unit over "
                f"{self.ring.tag}, so this Laurent series has no reciprocal"
            )
        return LaurentSeries(tuple(-e for e in self.vertex_exp), self.body.inverse())

    # -- text and JSON -------------------------------------------------------------

    def __str__(self) -> str:
        if self.body.is_zero:
            return "0"
        v = format_monomial(self.vertex_exp)
        return str(self.body) if v == "1" else f"{v} * ({self.body})"

    def __repr__(self) -> str:
        return f"LaurentSeries({self}, accuracy={self.accuracy})"

    def to_payload(self) -> dict:
        return {
            "vertex": list(self.vertex_exp),
            "body": self.body.to_payload(),
            "accuracy": self.accuracy,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "LaurentSeries":
        body = Series.from_payload(payload["body"])
        if payload["accuracy"] != body.trunc:
            raise ValueError(
                f"accuracy {payload['accuracy']} does not match the body "
                f"truncation order {body.trunc}"
            )
        return cls(tuple(payload["vertex"]), body)

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "LaurentSeries":
        return cls.from_payload(json.loads(text))


def laurent_normalize(dim: int, accuracy: int, ring: Ring, terms) -> LaurentSeries:
    """Function form of :meth:`LaurentSeries.from_terms`."""
    return LaurentSeries.from_terms(dim, accuracy, ring, terms)


class StarTuple:
    """A tuple of series under the coordinatewise product."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("a tuple needs at least one component")
        head = comps[0]
        for s in comps:
            head._check_context(s)
        if len(comps) != head.dim:
            raise ContextMismatchError(
                f"a tuple in dimension {head.dim} needs {head.dim} components, "
                f"got {len(comps)}"
            )
        self.components = comps

    @property
    def dim(self) -> int:
        return self.components[0].dim

    @property
    def trunc(self) -> int:
        return self.components[0].trunc

    @property
    def ring(self) -> Ring:
        return self.components[0].ring

    @classmethod
    def ones(cls, dim: int, trunc: int, ring: Ring) -> "StarTuple":
        """The identity for the coordinatewise product."""
        return cls(Series.one(dim, trunc, ring) for _ in range(dim))

    def __getitem__(self, j: int) -> Series:
        return self.components[j]

    def __len__(self) -> int:
        return len(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StarTuple):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def _check_context(self, other: "StarTuple") -> None:
        if not isinstance(other, StarTuple):
            raise TypeError(f"expected a StarTuple, got {type(other).__name__}")
        self.components[0]._check_context(other.components[0])

    def __mul__(self, other: "StarTuple") -> "StarTuple":
        """Coordinatewise product; commutative, with identity ``ones``."""
        self._check_context(other)
        return StarTuple(a * b for a, b in zip(self.components, other.components))

    def all_units(self) -> bool:
        return all(c.is_unit() for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"StarTuple{self}"

    def to_payload(self) -> dict:
        return {"components": [c.to_payload() for c in self.components]}

    @classmethod
    def from_payload(cls, payload: dict) -> "StarTuple":
        return cls(Series.from_payload(p) for p in payload["components"])


def star_mul(f: StarTuple, g: StarTuple) -> StarTuple:
    """Function form of the coordinatewise product."""
    return f * g


def k_map(f: StarTuple) -> FormalMap:
    """The substitution map ``x_j -> x_j * f_j`` of a tuple of units.

    The components gain a factor ``x_j``, so the map is exact one order
    above the tuple's truncation order.  Its linear part is diagonal
    with the components' constant terms on the diagonal, hence the map
    is always invertible.
    """
    for j, c in enumerate(f.components):
        if not c.is_unit():
            raise NotAUnitError(
                f"component {j + 1} of the tuple is not a unit series, so "
                f"x{j + 1} * f{j + 1} does not define an invertible substitution"
            )
    d = f.dim
    comps = []
    for j, c in enumerate(f.components):
        e = tuple(1 if t == j else 0 for t in range(d))
        comps.append(c.mul_by_monomial(e))
    return FormalMap(comps)


def star_from_map(g: FormalMap) -> StarTuple:
    """Recover the tuple from a map of the shape ``x_j -> x_j * f_j``.

    Inverse of :func:`k_map` up to truncation: the components drop one
    order because the factor ``x_j`` is divided back out.  A component
    not divisible by its variable raises
    :class:`~riordan.errors.ExactDivisionError`.
    """
    d = g.dim
    comps = []
    for j, c in enumerate(g.components):
        e = tuple(1 if t == j else 0 for t in range(d))
        comps.append(c.div_by_monomial(e))
    return StarTuple(comps)


def compose_signed(m: Monomial, g: StarTuple) -> LaurentSeries:
    """Substitute ``x_j -> x_j * g_j`` into the signed monomial ``x^m``.

    The result is the product over ``j`` of ``(x_j * g_j)^(m_j)``, with
    negative powers through the Laurent reciprocal; its vertex is
    exactly ``m`` and its accuracy is the tuple's truncation order.
    """
    m = tuple(m)
    check_monomial(m, g.dim, signed=True)
    if not g.all_units():
        raise NotAUnitError(
            "signed substitution needs every tuple component to be a unit"
        )
    body = Series.one(g.dim, g.trunc, g.ring)
    for j, e in enumerate(m):
        if e:
            factor = g.components[j] if e > 0 else g.components[j].inverse()
            body = body * factor ** abs(e)
    return LaurentSeries(m, body)


def compose_laurent(f: LaurentSeries, g: StarTuple) -> LaurentSeries:
    """Substitute ``x_j -> x_j * g_j`` into a windowed Laurent series.

    Splits ``f`` as vertex times body: the vertex substitutes through
    :func:`compose_signed` and the body through ordinary series
    composition, and the two substitute images multiply back together.
    The result keeps the vertex and the accuracy of ``f``; the tuple
    must be known at least that far.
    """
    if not isinstance(f, LaurentSeries):
        raise TypeError(f"expected a LaurentSeries, got {type(f).__name__}")
    f.ring.require_same(g.ring)
    if f.dim != g.dim:
        raise ContextMismatchError(f"dimension mismatch: {f.dim} vs {g.dim}")
    acc = f.accuracy
    if g.trunc < acc:
        raise AccuracyError(
            f"the tuple is known to order {g.trunc}, below the accuracy {acc} "
            "of the series being substituted into it"
        )
    head = compose_signed(f.vertex_exp, g)
    tail_map = k_map(g).lower_truncation(acc)
    tail = LaurentSeries.from_series(
        compose_series(f.body.lower_truncation(acc), tail_map)
    )
    return head * tail


def star_compose(outer: StarTuple, inner: StarTuple) -> StarTuple:
    """The tuple whose substitution map is ``outer``'s after ``inner``'s.

    Composing ``x_j -> x_j * outer_j`` with ``x_j -> x_j * inner_j``
    (apply ``inner`` first) gives ``x_j -> x_j * inner_j *
    (outer_j o k_map(inner))``, again of tuple shape, which is why these
    maps form a group.
    """
    outer._check_context(inner)
    inner_map = k_map(inner).lower_truncation(outer.trunc)
    tables = PowerTables(inner_map)
    return StarTuple(
        i * compose_series(o, inner_map, tables)
        for o, i in zip(outer.components, inner.components)
    )


class VSRElement:
    """A pair of a unit Laurent series and a tuple of unit series.

    The tuple acts by substitution through :func:`k_map`; the pair acts
    on Laurent series by ``u -> f * (u o g)``, and the pairs form a
    group whose product and inverse live in :func:`vsr_mul` and
    :func:`vsr_inverse`.
    """

    __slots__ = ("f", "g")

    def __init__(self, f: LaurentSeries, g: StarTuple):
        if not isinstance(f, LaurentSeries):
            raise TypeError(f"expected a LaurentSeries, got {type(f).__name__}")
        if not isinstance(g, StarTuple):
            raise TypeError(f"expected a StarTuple, got {type(g).__name__}")
        f.ring.require_same(g.ring)
        if f.dim != g.dim:
            raise ContextMismatchError(f"dimension mismatch: {f.dim} vs {g.dim}")
        if not f.is_unit():
            raise NotAUnitError("the Laurent series of a group pair must be a unit")
        for j, c in enumerate(g.components):
            if not c.is_unit():
                raise NotAUnitError(
                    f"tuple component {j + 1} of a group pair must be a unit series"
                )
        self.f = f
        self.g = g

    @property
    def dim(self) -> int:
        return self.f.dim

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @classmethod
    def identity(cls, dim: int, accuracy: int, ring: Ring, tuple_trunc: int | None = None) -> "VSRElement":
        if tuple_trunc is None:
            tuple_trunc = accuracy
        return cls(
            LaurentSeries.one(dim, accuracy, ring),
            StarTuple.ones(dim, tuple_trunc, ring),
        )

    def is_classical(self) -> bool:
        """True when the vertex sits at the origin, i.e. no negative support."""
        return self.vertex_exp == mono_one(self.dim)

    @property
    def vertex_exp(self) -> Monomial:
        return self.f.vertex_exp

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VSRElement):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    __hash__ = None

    def __repr__(self) -> str:
        return f"VSRElement({self.f}, {self.g})"

    def __mul__(self, other: "VSRElement") -> "VSRElement":
        return vsr_mul(self, other)

    def inverse(self) -> "VSRElement":
        return vsr_inverse(self)

    def to_payload(self) -> dict:
        return {"f": self.f.to_payload(), "g": self.g.to_payload()}

    @classmethod
    def from_payload(cls, payload: dict) -> "VSRElement":
        return cls(
            LaurentSeries.from_payload(payload["f"]),
            StarTuple.from_payload(payload["g"]),
        )


def vsr_mul(a: VSRElement, b: VSRElement, convention: str = LEFT_INTO_RIGHT) -> VSRElement:
    """The pair product ``(a.f * (b.f o a.g), <composed tuple>)``.

    The first slot is fixed; the second composes the substitution maps
    in the order named by ``convention`` (see the module docstring).
    """
    _check_convention(convention)
    a.f._check_context(b.f)
    first = a.f * compose_laurent(b.f, a.g)
    if convention == LEFT_INTO_RIGHT:
        second = star_compose(b.g, a.g)
    else:
        second = star_compose(a.g, b.g)
    return VSRElement(first, second)


def vsr_inverse(a: VSRElement, convention: str = LEFT_INTO_RIGHT) -> VSRElement:
    """The two-sided inverse pair, verified by multiplying back.

    The tuple slot inverts by inverting the substitution map and
    reading the tuple back off it; the series slot is the reciprocal
    carried through the inverted substitution.  The same pair is the
    inverse under either convention; verification runs under the one
    requested.
    """
    _check_convention(convention)
    g_inv = star_from_map(k_map(a.g).inverse())
    f_inv = compose_laurent(a.f.inverse(), g_inv)
    out = VSRElement(f_inv, g_inv)
    ident = VSRElement.identity(
        a.dim, min(a.f.accuracy, f_inv.accuracy), a.ring, a.g.trunc
    )
    if vsr_mul(a, out, convention) != ident or vsr_mul(out, a, convention) != ident:
        raise InternalCheckError("pair inverse failed to verify")
    return out


class _ColumnCache:
    """Lazily built columns ``f * (x^n o g)`` of one pair, for signed ``n``.

    Neighboring columns differ by one factor ``x_j * g_j`` (or its
    reciprocal), so each new column costs one Laurent product.
    """

    def __init__(self, a: VSRElement):
        self.elem = a
        d = a.dim
        self._fwd = []
        self._bwd = []
        for j, c in enumerate(a.g.components):
            e = tuple(1 if t == j else 0 for t in range(d))
            factor = LaurentSeries(e, c)
            self._fwd.append(factor)
            self._bwd.append(factor.inverse())
        self._memo = {mono_one(d): a.f}

    def column(self, n: Monomial) -> LaurentSeries:
        col = self._memo.get(n)
        if col is not None:
            return col
        j = next(i for i, e in enumerate(n) if e)
        step = 1 if n[j] > 0 else -1
        prev = n[:j] + (n[j] - step,) + n[j + 1 :]
        factor = self._fwd[j] if step > 0 else self._bwd[j]
        col = self.column(prev) * factor
        self._memo[n] = col
        return col

    def entry(self, m: Monomial, n: Monomial):
        return self.column(n).coeff_at(m)


class WindowMatrix:
    """The action matrix restricted to a finite box of signed exponents.

    Rows and columns are indexed by the vectors ``lo <= n <= hi``
    (componentwise) in graded order on ``n - lo``; the entry at
    ``(m, n)`` is the coefficient at ``m`` of ``f * (x^n o g)``.
    """

    __slots__ = ("dim", "ring", "lo", "hi", "basis", "rows", "_index")

    def __init__(self, dim: int, ring: Ring, lo: Monomial, hi: Monomial, rows):
        self.dim = dim
        self.ring = ring
        self.lo = tuple(lo)
        self.hi = tuple(hi)
        self.basis = enumerate_box(self.lo, self.hi)
        n = len(self.basis)
        rows = [list(r) for r in rows]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} matrix over the box basis")
        self.rows = rows
        self._index = {m: i for i, m in enumerate(self.basis)}

    @property
    def size(self) -> int:
        return len(self.basis)

    def entry(self, m: Monomial, n: Monomial):
        return self.rows[self._index[tuple(m)]][self._index[tuple(n)]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.ring == other.ring
            and self.lo == other.lo
            and self.hi == other.hi
            and self.rows == other.rows
        )

    __hash__ = None

    def to_payload(self) -> dict:
        return {
            "d": self.dim,
            "ring": self.ring.tag,
            "lo": list(self.lo),
            "hi": list(self.hi),
            "basis": [format_monomial(m) for m in self.basis],
            "entries": [[self.ring.format(v) for v in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), separators=(",", ":"))


def window_matrix(a: VSRElement, lo: Monomial, hi: Monomial) -> WindowMatrix:
    """Materialize the box window of the action matrix of ``a``.

    Every entry must be readable from the operands' accuracy windows;
    an entry outside them raises :class:`AccuracyError` rather than
    being filled with a guess.
    """
    lo, hi = tuple(lo), tuple(hi)
    check_monomial(lo, a.dim, signed=True)
    check_monomial(hi, a.dim, signed=True)
    basis = enumerate_box(lo, hi)
    cache = _ColumnCache(a)
    columns = [cache.column(n) for n in basis]
    rows = [[col.coeff_at(m) for col in columns] for m in basis]
    return WindowMatrix(a.dim, a.ring, lo, hi, rows)


@dataclass
class ConjectureReport:
    """Outcome of one windowed homomorphism-and-injectivity trial.

    Entries are *certified* when both the direct entry of the product's
    matrix and every term of the banded inner sum were readable from
    the accuracy windows; only certified entries can confirm or refute
    anything.  Entries that are not certified are counted, never judged.
    ``injectivity_ok`` is ``True`` when the factors' windows provably
    differ, and ``None`` when the data differ but the windows cannot
    tell (or when the factors are equal, flagged by
    ``injectivity_applicable``); a finite window can never prove two
    distinct pairs equal, so ``False`` does not occur.
    """

    convention: str
    dim: int
    radius: int
    certified_pairs: int
    uncertified_pairs: int
    certified_radius: int | None
    homomorphism_ok: bool
    mismatch_count: int
    mismatches: list = field(default_factory=list)
    injectivity_applicable: bool = False
    injectivity_ok: bool | None = None

    def to_payload(self) -> dict:
        return {
            "convention": self.convention,
            "d": self.dim,
            "radius": self.radius,
            "certified_pairs": self.certified_pairs,
            "uncertified_pairs": self.uncertified_pairs,
            "certified_radius": self.certified_radius,
            "homomorphism_ok": self.homomorphism_ok,
            "mismatch_count": self.mismatch_count,
            "mismatches": self.mismatches,
            "injectivity_applicable": self.injectivity_applicable,
            "injectivity_ok": self.injectivity_ok,
        }


def _leading_exponents(dim: int) -> list:
    """The origin and the unit vectors: the columns that determine a pair."""
    out = [mono_one(dim)]
    for j in range(dim):
        out.append(tuple(1 if t == j else 0 for t in range(dim)))
    return out


def conjecture_trial(
    a: VSRElement,
    b: VSRElement,
    radius: int,
    convention: str = LEFT_INTO_RIGHT,
) -> ConjectureReport:
    """Compare the product's window matrix against the banded matrix product.

    For every pair ``(m, n)`` in the box ``[-radius, radius]^d`` the
    direct entry of the matrix of ``a * b`` is compared with the inner
    sum over ``p`` of ``A[m, p] * B[p, n]``.  Both matrices have banded
    support: a column of ``A`` at ``p`` lives above ``a``'s vertex plus
    ``p``, and a row of ``B`` at ``p`` reaches only columns ``n`` with
    ``p`` above ``b``'s vertex plus ``n``, so the sum ranges over the
    finite box between ``n`` plus ``b``'s vertex and ``m`` minus ``a``'s
    vertex and is complete whenever every referenced entry is readable.
    Entries certified that way are compared exactly; the rest are
    reported as uncertified, never as failures.
    """
    _check_convention(convention)
    if radius < 0:
        raise ValueError(f"box radius must be >= 0, got {radius}")
    d, ring = a.dim, a.ring
    ab = vsr_mul(a, b, convention)
    cols_a = _ColumnCache(a)
    cols_b = _ColumnCache(b)
    cols_ab = _ColumnCache(ab)
    lo = (-radius,) * d
    hi = (radius,) * d
    box = enumerate_box(lo, hi)
    va, vb = a.vertex_exp, b.vertex_exp

    certified = 0
    uncertified = 0
    certified_radius = radius
    mismatch_count = 0
    mismatches = []
    for n in box:
        p_lo = _mono_add(n, vb)
        for m in box:
            p_hi = _mono_sub(m, va)
            try:
                direct = cols_ab.entry(m, n)
                acc = 0
                if monomials.divides(p_lo, p_hi):
                    for p in enumerate_box(p_lo, p_hi):
                        acc = acc + cols_a.entry(m, p) * cols_b.entry(p, n)
                banded = ring.finalize(acc) if acc else ring.zero
            except AccuracyError:
                uncertified += 1
                need = max(max(abs(e) for e in m), max(abs(e) for e in n))
                certified_radius = min(certified_radius, need - 1)
                continue
            certified += 1
            if direct != banded:
                mismatch_count += 1
                if len(mismatches) < _MISMATCH_RECORD_CAP:
                    mismatches.append(
                        {
                            "m": format_monomial(m),
                            "n": format_monomial(n),
                            "direct": ring.format(direct),
                            "banded": ring.format(banded),
                        }
                    )

    applicable = a.to_payload() != b.to_payload()
    injectivity_ok = None
    if applicable:
        for n in _leading_exponents(d):
            col_a, col_b = cols_a.column(n), cols_b.column(n)
            for m in box:
                try:
                    if col_a.coeff_at(m) != col_b.coeff_at(m):
                        injectivity_ok = True
                        break
                except AccuracyError:
                    continue
            if injectivity_ok:
                break

    return ConjectureReport(
        convention=convention,
        dim=d,
        radius=radius,
        certified_pairs=certified,
        uncertified_pairs=uncertified,
        certified_radius=certified_radius if certified_radius >= 0 else None,
        homomorphism_ok=mismatch_count == 0,
        mismatch_count=mismatch_count,
        mismatches=mismatches,
        injectivity_applicable=applicable,
        injectivity_ok=injectivity_ok,
    )

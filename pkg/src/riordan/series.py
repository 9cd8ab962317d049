"""Truncated multivariate formal power series.

A :class:`Series` is an exact representative of a coset in
``K[[x1..xd]] / M^(k+1)`` where ``M`` is the ideal generated by the
variables: it stores every coefficient of total degree at most ``k``
and nothing above.  Truncation is part of the context, like the ring
and the dimension; arithmetic never mixes truncation orders, and a
coefficient query above the order raises instead of returning zero,
because that coefficient is unknown rather than absent.

Storage is a sparse map from exponent tuple to a nonzero ring value.
Multiplication routes through a cached index table per ``(dim, trunc)``
context so the inner loop works on small integers; this is what keeps
large verification campaigns exact and fast at the same time.
"""

from __future__ import annotations

import json
from functools import lru_cache

from . import monomials
from .errors import (
    ContextMismatchError,
    ExactDivisionError,
    NotAUnitError,
    TruncationError,
    ZeroSeriesError,
)
from .monomials import Monomial, degree, grlex_key, mono_one
from .rings import Ring, ring_from_tag

# beyond this many admissible index pairs the cached multiplication
# table stops paying for itself; fall back to tuple arithmetic
_TABLE_PAIR_LIMIT = 4_000_000


@lru_cache(maxsize=None)
def _mul_context(dim: int, k: int):
    """Shared basis, index map and pair table for one ``(dim, trunc)``.

    ``table[i]`` lists, for every basis position ``j`` with
    ``deg(basis[i]) + deg(basis[j]) <= k``, the basis position of the
    product monomial.  Rows are prefixes because the basis is sorted by
    degree first, so a sorted scan of the other operand can stop at the
    row length.
    """
    basis = monomials.enumerate_upto(dim, k)
    index = monomials.basis_index(dim, k)
    count_leq = [0] * (k + 1)
    for m in basis:
        count_leq[degree(m)] += 1
    for t in range(1, k + 1):
        count_leq[t] += count_leq[t - 1]
    pairs = sum(count_leq[k - degree(m)] for m in basis)
    if pairs > _TABLE_PAIR_LIMIT:
        return basis, index, None
    table = []
    for m in basis:
        lim = count_leq[k - degree(m)]
        table.append(
            [index[tuple(a + b for a, b in zip(m, n))] for n in basis[:lim]]
        )
    return basis, index, table


class Series:
    """Exact truncated power series over a coefficient ring."""

    __slots__ = ("dim", "trunc", "ring", "_terms")

    def __init__(self, dim: int, trunc: int, ring: Ring, terms=None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive int, got {dim!r}")
        if not isinstance(trunc, int) or trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {trunc!r}")
        self.dim = dim
        self.trunc = trunc
        self.ring = ring
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                m = tuple(m)
                monomials.check_monomial(m, dim)
                if degree(m) > trunc:
                    raise TruncationError(
                        f"term {monomials.format_monomial(m)} exceeds truncation order {trunc}"
                    )
                v = ring.coerce(c)
                if v:
                    if m in clean:
                        raise ValueError(f"duplicate monomial {m!r}")
                    clean[m] = v
        self._terms = clean

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, dim: int, trunc: int, ring: Ring, terms: dict) -> "Series":
        """Internal constructor for already-canonical term maps."""
        out = cls.__new__(cls)
        out.dim = dim
        out.trunc = trunc
        out.ring = ring
        out._terms = terms
        return out

    @classmethod
    def zero(cls, dim: int, trunc: int, ring: Ring) -> "Series":
        return cls(dim, trunc, ring)

    @classmethod
    def one(cls, dim: int, trunc: int, ring: Ring) -> "Series":
        return cls(dim, trunc, ring, {mono_one(dim): ring.one})

    @classmethod
    def constant(cls, dim: int, trunc: int, ring: Ring, c) -> "Series":
        return cls(dim, trunc, ring, {mono_one(dim): c})

    @classmethod
    def monomial(cls, dim: int, trunc: int, ring: Ring, m: Monomial, c=1) -> "Series":
        """The image of ``c * x^m`` in the quotient (zero when ``deg m > trunc``)."""
        m = tuple(m)
        monomials.check_monomial(m, dim)
        if degree(m) > trunc:
            return cls(dim, trunc, ring)
        return cls(dim, trunc, ring, {m: c})

    @classmethod
    def variable(cls, dim: int, trunc: int, ring: Ring, i: int) -> "Series":
        """The variable ``x{i}`` with 1-based index ``i``."""
        if not 1 <= i <= dim:
            raise ValueError(f"variable index {i} out of range for dimension {dim}")
        e = tuple(1 if j == i - 1 else 0 for j in range(dim))
        return cls.monomial(dim, trunc, ring, e)

    # -- inspection -------------------------------------------------------------

    def coeff(self, m: Monomial):
        """Coefficient of ``x^m``; raises beyond the truncation order."""
        m = tuple(m)
        monomials.check_monomial(m, self.dim)
        if degree(m) > self.trunc:
            raise TruncationError(
                f"coefficient of {monomials.format_monomial(m)} lies above truncation order {self.trunc}"
            )
        return self._terms.get(m, self.ring.zero)

    def constant_term(self):
        return self._terms.get(mono_one(self.dim), self.ring.zero)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> tuple:
        """Support monomials in grlex order."""
        return tuple(sorted(self._terms, key=grlex_key))

    def terms_sorted(self) -> tuple:
        """(monomial, coefficient) pairs in grlex order."""
        return tuple((m, self._terms[m]) for m in self.support())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.trunc == other.trunc
            and self.ring == other.ring
            and self._terms == other._terms
        )

    __hash__ = None  # mutable storage; containers should not hash these

    def _check_context(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        self.ring.require_same(other.ring)
        if self.dim != other.dim:
            raise ContextMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.trunc != other.trunc:
            raise ContextMismatchError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    # -- linear arithmetic --------------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check_context(other)
        ring = self.ring
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = ring.finalize(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Series._raw(self.dim, self.trunc, ring, out)

    def __sub__(self, other: "Series") -> "Series":
        self._check_context(other)
        ring = self.ring
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = ring.finalize(out.get(m, 0) - c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Series._raw(self.dim, self.trunc, ring, out)

    def __neg__(self) -> "Series":
        ring = self.ring
        return Series._raw(
            self.dim, self.trunc, ring, {m: ring.neg(c) for m, c in self._terms.items()}
        )

    def scale(self, c) -> "Series":
        """Multiply by a ring scalar."""
        ring = self.ring
        c = ring.coerce(c)
        if not c:
            return Series._raw(self.dim, self.trunc, ring, {})
        out = {}
        for m, v in self._terms.items():
            w = ring.finalize(v * c)
            if w:
                out[m] = w
        return Series._raw(self.dim, self.trunc, ring, out)

    # -- multiplication -------------------------------------------------------------

    def __mul__(self, other: "Series") -> "Series":
        self._check_context(other)
        ring = self.ring
        if not self._terms or not other._terms:
            return Series._raw(self.dim, self.trunc, ring, {})
        basis, index, table = _mul_context(self.dim, self.trunc)
        if table is None:
            return self._mul_fallback(other)
        a = sorted((index[m], c) for m, c in self._terms.items())
        b = sorted((index[m], c) for m, c in other._terms.items())
        if len(b) < len(a):
            a, b = b, a
        acc = [0] * len(basis)
        for i, ci in a:
            row = table[i]
            lim = len(row)
            for j, cj in b:
                if j >= lim:
                    break
                l = row[j]
                acc[l] = acc[l] + ci * cj
        finalize = ring.finalize
        out = {}
        for l, v in enumerate(acc):
            if v:
                w = finalize(v)
                if w:
                    out[basis[l]] = w
        return Series._raw(self.dim, self.trunc, ring, out)

    def _mul_fallback(self, other: "Series") -> "Series":
        ring = self.ring
        k = self.trunc
        acc: dict = {}
        for m, cm in self._terms.items():
            dm = degree(m)
            for n, cn in other._terms.items():
                if dm + degree(n) > k:
                    continue
                key = tuple(a + b for a, b in zip(m, n))
                acc[key] = acc.get(key, 0) + cm * cn
        finalize = ring.finalize
        out = {}
        for m, v in acc.items():
            w = finalize(v)
            if w:
                out[m] = w
        return Series._raw(self.dim, self.trunc, ring, out)

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"series powers take non-negative int exponents, got {e!r}")
        out = Series.one(self.dim, self.trunc, self.ring)
        for _ in range(e):
            out = out * self
        return out

    # -- units ------------------------------------------------------------------------

    def is_unit(self) -> bool:
        """A series is invertible iff its constant term is a ring unit."""
        return self.ring.is_unit(self.constant_term())

    def inverse(self) -> "Series":
        """Multiplicative inverse via the truncated geometric series."""
        ring = self.ring
        c0 = self.constant_term()
        if not ring.is_unit(c0):
            raise NotAUnitError(
                f"series with constant term {ring.format(c0)} is not a unit over {ring.tag}"
            )
        alpha = ring.inverse(c0)
        one = Series.one(self.dim, self.trunc, ring)
        h = self.scale(alpha) - one  # vanishing constant term
        if h.is_zero:
            return Series.constant(self.dim, self.trunc, ring, alpha)
        s = one
        for _ in range(self.trunc):
            s = one - h * s
        return s.scale(alpha)

    # -- support geometry ----------------------------------------------------------------

    def vertex(self) -> Monomial:
        """Highest common factor of the support, undefined for zero."""
        if not self._terms:
            raise ZeroSeriesError("the zero series has no vertex")
        it = iter(self._terms)
        v = next(it)
        for m in it:
            v = monomials.hcf(v, m)
        return v

    def factor_out_vertex(self):
        """Write ``self = x^v * h`` with ``vertex(h) = 1``.

        Returns ``(v, h)``; ``h`` lives at truncation ``trunc - deg v``
        because that is all this coset determines about it.
        """
        v = self.vertex()
        dv = degree(v)
        h = {monomials.quotient(m, v): c for m, c in self._terms.items()}
        return v, Series._raw(self.dim, self.trunc - dv, self.ring, h)

    def mul_by_monomial(self, m: Monomial) -> "Series":
        """Multiply by ``x^m``, raising the truncation order by ``deg m``.

        Unlike a product with :meth:`monomial`, no information is lost:
        every coefficient of the result below the new order comes from a
        coefficient of ``self`` below the old one.
        """
        m = tuple(m)
        monomials.check_monomial(m, self.dim)
        out = {monomials.mono_mul(n, m): c for n, c in self._terms.items()}
        return Series._raw(self.dim, self.trunc + degree(m), self.ring, out)

    def div_by_monomial(self, m: Monomial) -> "Series":
        """Exact division by ``x^m``; every support monomial must be divisible."""
        m = tuple(m)
        monomials.check_monomial(m, self.dim)
        dm = degree(m)
        if dm > self.trunc:
            raise TruncationError(
                f"cannot divide a series of truncation order {self.trunc} by degree {dm}"
            )
        out = {}
        for n, c in self._terms.items():
            if not monomials.divides(m, n):
                raise ExactDivisionError(
                    f"{monomials.format_monomial(m)} does not divide "
                    f"{monomials.format_monomial(n)}"
                )
            out[monomials.quotient(n, m)] = c
        return Series._raw(self.dim, self.trunc - dm, self.ring, out)

    def lower_truncation(self, j: int) -> "Series":
        """Project onto truncation order ``j <= trunc`` (discard higher terms)."""
        if not isinstance(j, int) or j < 0:
            raise ValueError(f"truncation order must be >= 0, got {j!r}")
        if j > self.trunc:
            raise TruncationError(
                f"cannot raise truncation order from {self.trunc} to {j}"
            )
        out = {m: c for m, c in self._terms.items() if degree(m) <= j}
        return Series._raw(self.dim, j, self.ring, out)

    # -- text and JSON ----------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.terms_sorted():
            cs = self.ring.format(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            ms = monomials.format_monomial(m)
            body = mag if ms == "1" else (ms if mag == "1" else f"{mag}*{ms}")
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Series({self.dim}, {self.trunc}, {self.ring.tag}, {self})"

    def to_payload(self) -> dict:
        return {
            "d": self.dim,
            "trunc": self.trunc,
            "ring": self.ring.tag,
            "terms": [
                {"e": list(m), "c": self.ring.format(c)} for m, c in self.terms_sorted()
            ],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "Series":
        ring = ring_from_tag(payload["ring"])
        terms = [(tuple(t["e"]), ring.parse(t["c"])) for t in payload["terms"]]
        return cls(payload["d"], payload["trunc"], ring, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Series":
        return cls.from_payload(json.loads(text))

"""Formal maps: tuples of series with no constant term, under substitution.

A :class:`FormalMap` in dimension ``d`` is a ``d``-tuple of series in
``d`` variables, each with vanishing constant term, so substitution
into a truncated series is well defined degree by degree.  Composition
``f.compose(g)`` substitutes ``g`` into ``f`` (apply ``g`` first).

A map is invertible under composition exactly when its linear part is
an invertible matrix over the coefficient ring.  The inverse is
computed by splitting off the linear part and inverting the remaining
unipotent map with the fixed point iteration ``v <- id - h o v``, which
stabilizes within ``trunc`` steps; the result is verified by composing
back in both orders before it is returned.
"""

from __future__ import annotations

from .errors import (
    AlgebraError,
    ContextMismatchError,
    InternalCheckError,
    NotInvertibleError,
    TruncationError,
)
from .monomials import Monomial, check_monomial
from .rings import Ring
from .series import Series


class PowerTables:
    """Lazily extended powers of each component of a map.

    Substituting many monomials into the same map shares these tables,
    which is the difference between linear and quadratic work when a
    whole series is composed.
    """

    def __init__(self, g: "FormalMap"):
        self.g = g
        one = Series.one(g.dim, g.trunc, g.ring)
        self._pows = [[one, comp] for comp in g.components]

    def power(self, j: int, e: int) -> Series:
        pows = self._pows[j]
        while len(pows) <= e:
            pows.append(pows[-1] * pows[1])
        return pows[e]

    def monomial(self, m: Monomial) -> Series:
        """The substitution image of ``x^m``: the product of component powers."""
        out = None
        for j, e in enumerate(m):
            if e:
                p = self.power(j, e)
                out = p if out is None else out * p
        if out is None:
            return self._pows[0][0]  # empty product
        return out


def compose_monomial(m: Monomial, g: "FormalMap") -> Series:
    """Substitute ``g`` into the monomial ``x^m``."""
    check_monomial(m, g.dim)
    return PowerTables(g).monomial(tuple(m))


def compose_series(f: Series, g: "FormalMap", tables: PowerTables | None = None) -> Series:
    """Substitute ``g`` into ``f``, exactly at the shared truncation order."""
    if not isinstance(f, Series):
        raise TypeError(f"expected a Series, got {type(f).__name__}")
    f._check_context(g.components[0])
    if tables is None:
        tables = PowerTables(g)
    acc = Series.zero(f.dim, f.trunc, f.ring)
    for m, c in f.terms_sorted():
        acc = acc + tables.monomial(m).scale(c)
    return acc


class LinearPart:
    """A square matrix of ring scalars, the degree-one data of a map."""

    __slots__ = ("dim", "ring", "rows")

    def __init__(self, dim: int, ring: Ring, rows):
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        rows = [list(r) for r in rows]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"expected a {dim}x{dim} matrix")
        self.dim = dim
        self.ring = ring
        self.rows = [[ring.coerce(v) for v in r] for r in rows]

    @classmethod
    def identity(cls, dim: int, ring: Ring) -> "LinearPart":
        return cls(
            dim, ring, [[ring.one if i == j else ring.zero for j in range(dim)] for i in range(dim)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearPart):
            return NotImplemented
        return self.dim == other.dim and self.ring == other.ring and self.rows == other.rows

    __hash__ = None

    def matmul(self, other: "LinearPart") -> "LinearPart":
        self.ring.require_same(other.ring)
        if self.dim != other.dim:
            raise ContextMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")
        ring, n = self.ring, self.dim
        rows = [
            [
                ring.finalize(sum(self.rows[i][t] * other.rows[t][j] for t in range(n)))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LinearPart(n, ring, rows)

    def _minor(self, drop_row: int, drop_col: int) -> "LinearPart":
        rows = [
            [v for j, v in enumerate(r) if j != drop_col]
            for i, r in enumerate(self.rows)
            if i != drop_row
        ]
        return LinearPart(self.dim - 1, self.ring, rows)

    def det(self):
        """Exact determinant: cofactor expansion for small matrices,
        fraction-free elimination beyond dimension four."""
        if self.dim <= 4:
            return self._det_cofactor()
        return self._det_bareiss()

    def _det_cofactor(self):
        ring, n = self.ring, self.dim
        if n == 1:
            return self.rows[0][0]
        acc = 0
        for j in range(n):
            a = self.rows[0][j]
            if not a:
                continue
            term = a * self._minor(0, j)._det_cofactor()
            if j % 2 == 0:
                acc = acc + term
            else:
                acc = acc - term
        return ring.finalize(acc)

    def _det_bareiss(self):
        ring, n = self.ring, self.dim
        m = [row[:] for row in self.rows]
        sign = 1
        prev = ring.one
        for c in range(n - 1):
            pivot_row = next((r for r in range(c, n) if m[r][c]), None)
            if pivot_row is None:
                return ring.zero
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                sign = -sign
            for r in range(c + 1, n):
                for cc in range(c + 1, n):
                    num = ring.finalize(m[r][cc] * m[c][c] - m[r][c] * m[c][cc])
                    m[r][cc] = ring.exact_div(num, prev)
                m[r][c] = ring.zero
            prev = m[c][c]
        d = m[n - 1][n - 1]
        return ring.neg(d) if sign < 0 else d

    def adjugate(self) -> "LinearPart":
        ring, n = self.ring, self.dim
        if n == 1:
            return LinearPart(1, ring, [[ring.one]])
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                c = self._minor(j, i).det()
                row.append(c if (i + j) % 2 == 0 else ring.neg(c))
            rows.append(row)
        return LinearPart(n, ring, rows)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.det())

    def inverse(self) -> "LinearPart":
        d = self.det()
        if not self.ring.is_unit(d):
            raise NotInvertibleError(
                f"linear part has determinant {self.ring.format(d)}, not a unit over {self.ring.tag}"
            )
        alpha = self.ring.inverse(d)
        adj = self.adjugate()
        rows = [[self.ring.mul(v, alpha) for v in r] for r in adj.rows]
        return LinearPart(self.dim, self.ring, rows)

    def to_map(self, trunc: int) -> "FormalMap":
        """The linear formal map with these coefficients."""
        comps = []
        for i in range(self.dim):
            terms = {}
            for j, v in enumerate(self.rows[i]):
                if v:
                    e = tuple(1 if t == j else 0 for t in range(self.dim))
                    terms[e] = v
            comps.append(Series(self.dim, trunc, self.ring, terms))
        return FormalMap(comps)


class FormalMap:
    """A substitution map: ``d`` series in ``d`` variables, constant term zero."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("a formal map needs at least one component")
        head = comps[0]
        for s in comps:
            head._check_context(s)
        if len(comps) != head.dim:
            raise ContextMismatchError(
                f"a map in dimension {head.dim} needs {head.dim} components, got {len(comps)}"
            )
        for i, s in enumerate(comps):
            if s.constant_term():
                raise AlgebraError(
                    f"component {i + 1} has a nonzero constant term; "
                    "substitution maps must fix the origin"
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
    def identity(cls, dim: int, trunc: int, ring: Ring) -> "FormalMap":
        return cls(Series.variable(dim, trunc, ring, i + 1) for i in range(dim))

    def __getitem__(self, j: int) -> Series:
        return self.components[j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalMap):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self) -> str:
        return "FormalMap(" + ", ".join(str(c) for c in self.components) + ")"

    def compose(self, other: "FormalMap") -> "FormalMap":
        """``self`` after ``other``: substitute ``other`` into each component."""
        if not isinstance(other, FormalMap):
            raise TypeError(f"expected a FormalMap, got {type(other).__name__}")
        self.components[0]._check_context(other.components[0])
        tables = PowerTables(other)
        return FormalMap(compose_series(c, other, tables) for c in self.components)

    def power(self, r: int) -> "FormalMap":
        """Iterated self-composition; ``r = 0`` gives the identity map."""
        if not isinstance(r, int) or r < 0:
            raise ValueError(f"composition powers take non-negative ints, got {r!r}")
        out = FormalMap.identity(self.dim, self.trunc, self.ring)
        for _ in range(r):
            out = self.compose(out)
        return out

    def lower_truncation(self, j: int) -> "FormalMap":
        """Project every component onto truncation order ``j <= trunc``."""
        return FormalMap(c.lower_truncation(j) for c in self.components)

    def linear_part(self) -> LinearPart:
        if self.trunc < 1:
            raise TruncationError("truncation order 0 carries no linear data")
        ring, d = self.ring, self.dim
        rows = []
        for comp in self.components:
            row = []
            for j in range(d):
                e = tuple(1 if t == j else 0 for t in range(d))
                row.append(comp.coeff(e))
            rows.append(row)
        return LinearPart(d, ring, rows)

    def is_invertible(self) -> bool:
        """Invertible under composition iff the linear part is."""
        if self.trunc < 1:
            return False
        return self.linear_part().is_unit()

    def inverse(self) -> "FormalMap":
        """Compositional inverse, verified by composing back both ways."""
        if self.trunc < 1:
            raise NotInvertibleError("truncation order 0 carries no linear data")
        lin = self.linear_part()
        if not lin.is_unit():
            raise NotInvertibleError(
                f"linear part has determinant {self.ring.format(lin.det())}, "
                f"not a unit over {self.ring.tag}"
            )
        ident = FormalMap.identity(self.dim, self.trunc, self.ring)
        h_map = lin.inverse().to_map(self.trunc)
        u = h_map.compose(self)  # unipotent: identity linear part
        rem = [u[i] - ident[i] for i in range(self.dim)]  # order >= 2
        v = ident
        iterations = 0
        while True:
            tables = PowerTables(v)
            nxt = FormalMap(
                ident[i] - compose_series(rem[i], v, tables) for i in range(self.dim)
            )
            if nxt == v:
                break
            v = nxt
            iterations += 1
            if iterations > self.trunc:
                raise InternalCheckError(
                    "unipotent inversion failed to stabilize within the truncation bound"
                )
        out = v.compose(h_map)
        if self.compose(out) != ident or out.compose(self) != ident:
            raise InternalCheckError("compositional inverse failed to verify")
        return out

    # -- serialization ---------------------------------------------------------

    def to_payload(self) -> dict:
        return {"components": [c.to_payload() for c in self.components]}

    @classmethod
    def from_payload(cls, payload: dict) -> "FormalMap":
        return cls(Series.from_payload(p) for p in payload["components"])

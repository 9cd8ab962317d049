"""Monomial-indexed matrix representation of Riordan pairs.

Rows and columns are indexed by the monomials of degree at most the
truncation order, in grlex order; the entry at ``(m, n)`` is the
coefficient of ``x^m`` in ``f * (x^n o g)``.  Since every component of
``g`` vanishes at the origin, the column for ``x^n`` only has entries
in degrees ``>= deg n``: the matrix is graded lower triangular.

Multiplying two such matrices is exact on this index range: the entry
at ``(m, n)`` of a product only sums over intermediate monomials ``p``
with ``deg n <= deg p <= deg m``, all of which lie inside the basis, so
no truncation artifact can enter.  That is why equality of
``riordan_matrix(a * b)`` with ``riordan_matrix(a) @ riordan_matrix(b)``
is a faithful finite check of the homomorphism property.
"""

from __future__ import annotations

import json

from .errors import ContextMismatchError, InternalCheckError, NotInvertibleError
from .formal_maps import FormalMap
from .monomials import (
    basis_index,
    degree,
    enumerate_upto,
    format_monomial,
    parse_monomial,
)
from .riordan import RiordanElement
from .rings import Ring, ring_from_tag
from .series import Series

# corner cell of the CSV form: row labels are m, column labels are n
_CSV_CORNER = "m\\n"


class MonomialMatrix:
    """A dense square matrix over the degree <= trunc monomial basis."""

    __slots__ = ("dim", "trunc", "ring", "basis", "rows")

    def __init__(self, dim: int, trunc: int, ring: Ring, rows=None):
        self.dim = dim
        self.trunc = trunc
        self.ring = ring
        self.basis = enumerate_upto(dim, trunc)
        n = len(self.basis)
        if rows is None:
            self.rows = [[ring.zero] * n for _ in range(n)]
        else:
            rows = [list(r) for r in rows]
            if len(rows) != n or any(len(r) != n for r in rows):
                raise ValueError(f"expected a {n}x{n} matrix over the monomial basis")
            self.rows = [[ring.coerce(v) for v in r] for r in rows]

    @classmethod
    def _raw(cls, dim: int, trunc: int, ring: Ring, rows) -> "MonomialMatrix":
        out = cls.__new__(cls)
        out.dim = dim
        out.trunc = trunc
        out.ring = ring
        out.basis = enumerate_upto(dim, trunc)
        out.rows = rows
        return out

    @classmethod
    def identity(cls, dim: int, trunc: int, ring: Ring) -> "MonomialMatrix":
        out = cls(dim, trunc, ring)
        for i in range(len(out.basis)):
            out.rows[i][i] = ring.one
        return out

    @property
    def size(self) -> int:
        return len(self.basis)

    def _check_context(self, other: "MonomialMatrix") -> None:
        if not isinstance(other, MonomialMatrix):
            raise TypeError(f"expected a MonomialMatrix, got {type(other).__name__}")
        self.ring.require_same(other.ring)
        if self.dim != other.dim or self.trunc != other.trunc:
            raise ContextMismatchError(
                f"basis mismatch: ({self.dim}, {self.trunc}) vs ({other.dim}, {other.trunc})"
            )

    def entry(self, m, n):
        """Entry by row and column monomial."""
        index = basis_index(self.dim, self.trunc)
        return self.rows[index[tuple(m)]][index[tuple(n)]]

    def column_series(self, n) -> Series:
        """Column at monomial ``n`` read back as a series."""
        index = basis_index(self.dim, self.trunc)
        j = index[tuple(n)]
        terms = {}
        for i, m in enumerate(self.basis):
            v = self.rows[i][j]
            if v:
                terms[m] = v
        return Series._raw(self.dim, self.trunc, self.ring, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.trunc == other.trunc
            and self.ring == other.ring
            and self.rows == other.rows
        )

    __hash__ = None

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Exact matrix product, skipping stored zeros."""
        self._check_context(other)
        ring = self.ring
        n = len(self.basis)
        b_rows = other.rows
        finalize = ring.finalize
        zero = ring.zero
        out = []
        for i in range(n):
            arow = self.rows[i]
            acc = [0] * n
            for t in range(n):
                a = arow[t]
                if a:
                    brow = b_rows[t]
                    for l in range(n):
                        b = brow[l]
                        if b:
                            acc[l] = acc[l] + a * b
            out.append([finalize(v) if v else zero for v in acc])
        return MonomialMatrix._raw(self.dim, self.trunc, ring, out)

    def is_graded_triangular(self) -> bool:
        """No entry below a column's degree: zero whenever ``deg n > deg m``."""
        degs = [degree(m) for m in self.basis]
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if degs[j] > degs[i] and v:
                    return False
        return True

    # -- serialization -----------------------------------------------------------

    def to_csv(self) -> str:
        labels = [format_monomial(m) for m in self.basis]
        lines = [",".join([_CSV_CORNER] + labels)]
        for label, row in zip(labels, self.rows):
            lines.append(",".join([label] + [self.ring.format(v) for v in row]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, ring: Ring, dim: int | None = None) -> "MonomialMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty CSV matrix")
        header = lines[0].split(",")
        if header[0] != _CSV_CORNER:
            raise ValueError(f"expected corner cell {_CSV_CORNER!r}, got {header[0]!r}")
        labels = header[1:]
        if dim is None:
            dim = 1
            for label in labels:
                for part in label.split("*"):
                    if part.startswith("x"):
                        dim = max(dim, int(part[1:].partition("^")[0]))
        basis = [parse_monomial(s, dim) for s in labels]
        trunc = max(degree(m) for m in basis)
        if tuple(basis) != enumerate_upto(dim, trunc):
            raise ValueError("column labels are not the full grlex basis")
        rows = []
        if len(lines) != len(basis) + 1:
            raise ValueError(f"expected {len(basis)} rows, got {len(lines) - 1}")
        for expect, line in zip(labels, lines[1:]):
            cells = line.split(",")
            if cells[0] != expect:
                raise ValueError(f"row label {cells[0]!r} does not match {expect!r}")
            if len(cells) != len(basis) + 1:
                raise ValueError(f"row {expect!r} has {len(cells) - 1} entries")
            rows.append([ring.parse(v) for v in cells[1:]])
        return cls(dim, trunc, ring, rows)

    def to_payload(self) -> dict:
        return {
            "d": self.dim,
            "trunc": self.trunc,
            "ring": self.ring.tag,
            "basis": [format_monomial(m) for m in self.basis],
            "entries": [[self.ring.format(v) for v in row] for row in self.rows],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "MonomialMatrix":
        ring = ring_from_tag(payload["ring"])
        dim, trunc = payload["d"], payload["trunc"]
        labels = [format_monomial(m) for m in enumerate_upto(dim, trunc)]
        if payload["basis"] != labels:
            raise ValueError("basis labels do not match the grlex basis")
        rows = [[ring.parse(v) for v in row] for row in payload["entries"]]
        return cls(dim, trunc, ring, rows)

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "MonomialMatrix":
        return cls.from_payload(json.loads(text))


def riordan_matrix(a: RiordanElement) -> MonomialMatrix:
    """The matrix of the action ``u -> f * (u o g)`` on the monomial basis.

    Columns are built incrementally: the column for ``x_j * n`` is the
    column for ``n`` multiplied by the ``j``-th component of the map,
    so the whole matrix costs one series product per basis monomial.
    """
    dim, trunc, ring = a.dim, a.trunc, a.ring
    basis = enumerate_upto(dim, trunc)
    index = basis_index(dim, trunc)
    rows = [[ring.zero] * len(basis) for _ in basis]
    columns: dict = {}
    comps = a.g.components
    for ci, n in enumerate(basis):
        if ci == 0:
            col = a.f
        else:
            j = next(t for t, e in enumerate(n) if e)
            parent = n[:j] + (n[j] - 1,) + n[j + 1 :]
            col = columns[parent] * comps[j]
        columns[n] = col
        for m, c in col._terms.items():
            rows[index[m]][ci] = c
    return MonomialMatrix._raw(dim, trunc, ring, rows)


def homomorphism_check(a: RiordanElement, b: RiordanElement) -> bool:
    """Does the matrix of ``a * b`` equal the product of the matrices?

    Exact on the full degree <= trunc block; see the module docstring
    for why no truncation artifact can creep in.
    """
    return riordan_matrix(a * b) == riordan_matrix(a) @ riordan_matrix(b)


def reconstruct(matrix: MonomialMatrix) -> RiordanElement:
    """Read the pair ``(f, g)`` back off its matrix.

    The column of ``1`` is ``f`` itself, and the column of ``x_j`` is
    ``f * g_j``, so ``g_j`` is recovered by one exact division.  Needs
    ``trunc >= 1`` and a unit ``f``.
    """
    if matrix.trunc < 1:
        raise NotInvertibleError("reconstruction needs truncation order >= 1")
    f = matrix.column_series((0,) * matrix.dim)
    if not f.is_unit():
        raise NotInvertibleError("reconstruction needs a unit coefficient series")
    f_inv = f.inverse()
    comps = []
    for j in range(matrix.dim):
        e = tuple(1 if t == j else 0 for t in range(matrix.dim))
        comps.append(f_inv * matrix.column_series(e))
    return RiordanElement(f, FormalMap(comps))


def injectivity_probe(a: RiordanElement, b: RiordanElement) -> bool:
    """True iff the two matrices differ; checks reconstruction on the way.

    Distinct pairs always produce distinct matrices because each pair
    is recoverable from its matrix; this probe verifies that and
    reports whether the matrices differ.
    """
    checks = ((a, riordan_matrix(a)), (b, riordan_matrix(b)))
    for elem, mat in checks:
        if reconstruct(mat) != elem:
            raise InternalCheckError("matrix failed to reconstruct its pair")
    return checks[0][1] != checks[1][1]

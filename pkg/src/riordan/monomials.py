"""Monomials as plain exponent tuples.

A monomial in ``d`` variables is a length-``d`` tuple of non-negative
integers; a signed monomial allows negative exponents (the group
completion under componentwise addition).  Keeping these as bare tuples
makes them cheap dictionary keys; all structure lives in the functions
below.

The total order used everywhere is graded lexicographic: lower total
degree first, and within a degree the exponent vectors compare
lexicographically with ``x1`` most significant, larger ``x1`` exponent
first.  For two variables the enumeration starts
``1, x1, x2, x1^2, x1*x2, x2^2, ...``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import ExactDivisionError

Monomial = tuple  # exponent tuple; signed variants reuse the same shape

# exponents stay well inside a machine word; anything near this bound is
# a runaway computation, not a use case
MAX_EXPONENT = 2**62


def mono_one(dim: int) -> Monomial:
    return (0,) * dim


def degree(m: Monomial) -> int:
    return sum(m)


def check_monomial(m: Monomial, dim: int, signed: bool = False) -> None:
    if not isinstance(m, tuple) or len(m) != dim:
        raise ValueError(f"expected an exponent tuple of length {dim}, got {m!r}")
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"exponents must be ints, got {m!r}")
        if not signed and e < 0:
            raise ValueError(f"negative exponent in unsigned monomial {m!r}")


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    """Componentwise sum, with an explicit overflow guard."""
    if len(m) != len(n):
        raise ValueError(f"dimension mismatch: {m!r} vs {n!r}")
    out = tuple(a + b for a, b in zip(m, n))
    for e in out:
        if e > MAX_EXPONENT or e < -MAX_EXPONENT:
            raise OverflowError(f"exponent overflow in {m!r} * {n!r}")
    return out


def divides(m: Monomial, n: Monomial) -> bool:
    """True when ``m`` divides ``n``, i.e. componentwise ``m <= n``."""
    return all(a <= b for a, b in zip(m, n))


def quotient(n: Monomial, m: Monomial) -> Monomial:
    """The monomial ``n / m``; requires ``m`` to divide ``n``."""
    if not divides(m, n):
        raise ExactDivisionError(f"{format_monomial(m)} does not divide {format_monomial(n)}")
    return tuple(b - a for a, b in zip(m, n))


def hcf(m: Monomial, n: Monomial) -> Monomial:
    """Highest common factor: componentwise minimum."""
    return tuple(min(a, b) for a, b in zip(m, n))


def inf_signed(m: Monomial, n: Monomial) -> Monomial:
    """Componentwise minimum on signed monomials (lattice infimum)."""
    return tuple(min(a, b) for a, b in zip(m, n))


def grlex_key(m: Monomial):
    """Sort key for the graded lexicographic order."""
    return (sum(m), tuple(-e for e in m))


def grlex_cmp(m: Monomial, n: Monomial) -> int:
    """Three-way comparison in the graded lexicographic order."""
    a, b = grlex_key(m), grlex_key(n)
    return -1 if a < b else (0 if a == b else 1)


def _compositions(total: int, slots: int) -> Iterator[tuple]:
    """Exponent tuples of the given total degree, in grlex order."""
    if slots == 1:
        yield (total,)
        return
    for lead in range(total, -1, -1):
        for rest in _compositions(total - lead, slots - 1):
            yield (lead,) + rest


@lru_cache(maxsize=None)
def enumerate_upto(dim: int, k: int) -> tuple:
    """All monomials of degree at most ``k``, strictly increasing in grlex.

    The result has ``C(dim + k, dim)`` entries and is cached, so callers
    may treat it as a shared basis object.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if k < 0:
        raise ValueError(f"truncation order must be >= 0, got {k}")
    out = []
    for deg in range(k + 1):
        out.extend(_compositions(deg, dim))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(dim: int, k: int) -> dict:
    """Map each monomial of degree <= k to its position in the basis."""
    return {m: i for i, m in enumerate(enumerate_upto(dim, k))}


def enumerate_box(lo: Monomial, hi: Monomial) -> tuple:
    """Signed monomials ``lo <= m <= hi``, sorted by grlex on ``m - lo``."""
    if len(lo) != len(hi):
        raise ValueError("box corners must share a dimension")
    if not divides(lo, hi):
        raise ValueError(f"empty box: {lo!r} !<= {hi!r}")
    shifted = enumerate_upto(len(lo), degree(tuple(b - a for a, b in zip(lo, hi))))
    out = []
    for s in shifted:
        m = tuple(a + b for a, b in zip(lo, s))
        if all(x <= h for x, h in zip(m, hi)):
            out.append(m)
    return tuple(out)


def format_monomial(m: Monomial) -> str:
    """Render ``(2, 1)`` as ``x1^2*x2``; the empty product is ``1``."""
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(s: str, dim: int, signed: bool = False) -> Monomial:
    """Inverse of :func:`format_monomial`."""
    s = s.strip()
    exps = [0] * dim
    if s == "1":
        return tuple(exps)
    for part in s.split("*"):
        part = part.strip()
        if not part.startswith("x"):
            raise ValueError(f"bad monomial factor {part!r} in {s!r}")
        name, _, power = part.partition("^")
        try:
            idx = int(name[1:], 10)
        except ValueError:
            raise ValueError(f"bad variable {name!r} in {s!r}") from None
        if not 1 <= idx <= dim:
            raise ValueError(f"variable {name!r} out of range for dimension {dim}")
        e = 1
        if power:
            try:
                e = int(power, 10)
            except ValueError:
                raise ValueError(f"bad exponent {power!r} in {s!r}") from None
        if e < 0 and not signed:
            raise ValueError(f"negative exponent in unsigned monomial {s!r}")
        if exps[idx - 1]:
            raise ValueError(f"repeated variable x{idx} in {s!r}")
        exps[idx - 1] = e
    return tuple(exps)

"""The truncation tower.

Lowering the truncation order is a ring homomorphism compatible with
substitution, so a pair at order ``k`` induces compatible pairs at
every order ``j <= k``, and the matrices at the lower levels are
upper-left blocks of the matrix at level ``k``.  These helpers make
that tower explicit; the compatibility statements live in the tests.
"""

from __future__ import annotations

from .errors import TruncationError
from .formal_maps import FormalMap
from .matrices import MonomialMatrix, riordan_matrix
from .riordan import RiordanElement
from .series import Series


def project(a: RiordanElement, k: int) -> RiordanElement:
    """Lower a pair to truncation order ``k <= a.trunc``, componentwise."""
    if k > a.trunc:
        raise TruncationError(f"cannot raise truncation order from {a.trunc} to {k}")
    return RiordanElement(
        a.f.lower_truncation(k),
        FormalMap(c.lower_truncation(k) for c in a.g.components),
    )


def pk_action(a: RiordanElement, p: Series) -> Series:
    """The level action ``p -> f * (p o g)`` on a truncated polynomial.

    ``p`` must live in the same context as ``a``; the result depends
    only on the residues of ``f``, ``g`` and ``p`` at that level, which
    is what makes the tower consistent.
    """
    return a.apply(p)


def level_matrix(a: RiordanElement, k: int) -> MonomialMatrix:
    """The matrix of the level-``k`` action, for any ``k <= a.trunc``.

    Equals the upper-left block of ``riordan_matrix(a)`` on the shared
    basis monomials.
    """
    return riordan_matrix(project(a, k))

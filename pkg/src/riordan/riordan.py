"""The several-variable Riordan group.

An element is a pair ``(f, g)`` of a series ``f`` and a formal map
``g`` over one shared context.  The product is

    (f, g) * (f', g') = (f * (f' o g), g' o g)

which matches multiplication of the associated monomial-indexed
matrices.  The pair is invertible exactly when ``f`` is a unit series
and ``g`` is an invertible map; inverses are verified by multiplying
back before they are returned.

The action on a series ``u`` is ``u -> f * (u o g)``; columns of the
matrix representation are this action evaluated on monomials.
"""

from __future__ import annotations

from .errors import InternalCheckError, NotInvertibleError
from .formal_maps import FormalMap, compose_series
from .rings import Ring
from .series import Series


class RiordanElement:
    """A pair ``(f, g)``: a coefficient series and a substitution map."""

    __slots__ = ("f", "g")

    def __init__(self, f: Series, g: FormalMap):
        if not isinstance(f, Series) or not isinstance(g, FormalMap):
            raise TypeError("RiordanElement takes a Series and a FormalMap")
        f._check_context(g.components[0])
        self.f = f
        self.g = g

    @property
    def dim(self) -> int:
        return self.f.dim

    @property
    def trunc(self) -> int:
        return self.f.trunc

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @classmethod
    def identity(cls, dim: int, trunc: int, ring: Ring) -> "RiordanElement":
        return cls(Series.one(dim, trunc, ring), FormalMap.identity(dim, trunc, ring))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RiordanElement):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    __hash__ = None

    def __repr__(self) -> str:
        return f"RiordanElement({self.f}, {self.g!r})"

    def _check_context(self, other: "RiordanElement") -> None:
        if not isinstance(other, RiordanElement):
            raise TypeError(f"expected a RiordanElement, got {type(other).__name__}")
        self.f._check_context(other.f)

    def __mul__(self, other: "RiordanElement") -> "RiordanElement":
        self._check_context(other)
        return RiordanElement(
            self.f * compose_series(other.f, self.g),
            other.g.compose(self.g),
        )

    def apply(self, u: Series) -> Series:
        """The action ``u -> f * (u o g)`` on a series in the same context."""
        u._check_context(self.f)
        return self.f * compose_series(u, self.g)

    def is_invertible(self) -> bool:
        return self.f.is_unit() and self.g.is_invertible()

    def inverse(self) -> "RiordanElement":
        """Group inverse ``((1/f) o g^{-1}, g^{-1})``, verified by multiplying back."""
        if not self.f.is_unit():
            raise NotInvertibleError(
                "the coefficient series is not a unit, so the pair is not invertible"
            )
        g_inv = self.g.inverse()  # raises NotInvertibleError when the map is singular
        f_inv = compose_series(self.f.inverse(), g_inv)
        out = RiordanElement(f_inv, g_inv)
        ident = RiordanElement.identity(self.dim, self.trunc, self.ring)
        if self * out != ident or out * self != ident:
            raise InternalCheckError("group inverse failed to verify")
        return out

    def is_appell(self) -> bool:
        """True when the map is the identity (the Appell subgroup)."""
        return self.g == FormalMap.identity(self.dim, self.trunc, self.ring)

    def is_lagrange(self) -> bool:
        """True when the series is 1 (the Lagrange subgroup)."""
        return self.f == Series.one(self.dim, self.trunc, self.ring)

    # -- serialization ------------------------------------------------------------

    def to_payload(self) -> dict:
        return {"f": self.f.to_payload(), "g": self.g.to_payload()}

    @classmethod
    def from_payload(cls, payload: dict) -> "RiordanElement":
        return cls(Series.from_payload(payload["f"]), FormalMap.from_payload(payload["g"]))

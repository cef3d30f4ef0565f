"""Exact arithmetic in the algebraic Mukai lattice of a Picard-rank-1 K3 surface.

The surface enters every formula only through the self-intersection number
h^2 of its ample generator h, and a Mukai vector is the integer triple
(r, m, s) standing for (r, m*h, s).  All arithmetic is arbitrary-precision
integer or exact rational; nothing in this package touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class K3Surface:
    """A K3 surface X with NS(X) = Z*h, carried by the even integer h^2 >= 2."""

    h_squared: int

    def __post_init__(self) -> None:
        if not isinstance(self.h_squared, int):
            raise ValueError("h_squared must be an integer")
        if self.h_squared < 2 or self.h_squared % 2 != 0:
            raise ValueError(
                f"h_squared must be a positive even integer, got {self.h_squared}"
            )


@dataclass(frozen=True)
class MukaiVector:
    """Integer triple (r, m, s) for the Mukai vector (r, m*h, s).

    Components are unconstrained so that sums, differences and duals stay
    inside the type; rank positivity is enforced by the operations that
    actually need a sheaf behind the vector.
    """

    r: int
    m: int
    s: int

    def __post_init__(self) -> None:
        for name in ("r", "m", "s"):
            if not isinstance(getattr(self, name), int):
                raise ValueError(f"MukaiVector component {name} must be an integer")

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.m + other.m, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.m - other.m, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.m, -self.s)


def mukai_pairing(surface: K3Surface, v: MukaiVector, w: MukaiVector) -> int:
    """Mukai pairing <v, w> = m_v*m_w*h^2 - r_v*s_w - r_w*s_v.

    Symmetric and bilinear over the integers.
    """
    return v.m * w.m * surface.h_squared - v.r * w.s - w.r * v.s


def mukai_square(surface: K3Surface, v: MukaiVector) -> int:
    """Self-pairing v^2 = <v, v>; always even when h^2 is even."""
    return mukai_pairing(surface, v, v)


def euler_pair(surface: K3Surface, v: MukaiVector, w: MukaiVector) -> int:
    """Euler pairing chi(v, w) = sum_i (-1)^i ext^i = -<v, w>."""
    return -mukai_pairing(surface, v, w)


def euler_char(v: MukaiVector) -> int:
    """Euler characteristic chi = r + s (independent of m)."""
    return v.r + v.s


def twisted_chi(v: MukaiVector, k: int) -> int:
    """chi of the twist by the ideal sheaf of k points: r + s - r*k."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return v.r + v.s - v.r * k


def dual_vector(v: MukaiVector) -> MukaiVector:
    """Mukai vector (r, -m, s) of the dual sheaf; an involution."""
    return MukaiVector(v.r, -v.m, v.s)


def ideal_sheaf_vector(k: int) -> MukaiVector:
    """Mukai vector (1, 0, 1-k) of the ideal sheaf of a length-k subscheme.

    Pinned by the two identities <v(I_Z), v(I_Z)> = 2k - 2 and
    chi(I_Z) = 2 - k, which the tests verify.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return MukaiVector(1, 0, 1 - k)


def slope_on_X(surface: K3Surface, v: MukaiVector) -> Fraction:
    """Slope with respect to h on the surface itself: (c1.h)/r = m*h^2/r."""
    if v.r < 1:
        raise ValueError(f"slope is defined only for positive rank, got r={v.r}")
    return Fraction(v.m * surface.h_squared, v.r)

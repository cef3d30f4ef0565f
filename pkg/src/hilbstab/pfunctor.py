"""Graded Ext-dimension calculus for the ideal-sheaf transform to X^[k].

The integral transform D^b(X) -> D^b(X^[k]) with kernel the universal
ideal sheaf multiplies graded Ext spaces by the cohomology of P^(k-1):

    Ext^*(image of E, image of F)  =  Ext^*_X(E, F) (x) H^*(P^(k-1), C)

as graded vector spaces.  Only dimension vectors are modeled here, so the
tensor product is a convolution of integer sequences.  The Ext table on X
between stable sheaves of equal slope is itself pinned by lattice data:

    same object:      [1, v^2 + 2, 1]   (simple, Serre-dual ends, chi = -v^2)
    distinct objects: [0, <v, w>,  0]   (no homs between distinct stable
                                         sheaves of the same slope)

A table entry that would come out negative certifies that the claimed pair
of stable sheaves cannot exist, and raises NegativeExt.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .lattice import K3Surface, MukaiVector, mukai_pairing, mukai_square


class NegativeExt(ValueError):
    """An Ext dimension came out negative: the input pair is inconsistent."""


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of a graded vector space, indexed from degree 0.

    Trailing zeros are stripped on construction, so two values are equal
    exactly when they agree in every degree.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(self.dims)
        for d in dims:
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"graded dimensions must be non-negative integers, got {d!r}")
        while dims and dims[-1] == 0:
            dims = dims[:-1]
        object.__setattr__(self, "dims", dims)

    def __getitem__(self, degree: int) -> int:
        if degree < 0:
            raise IndexError("cohomological degree must be non-negative")
        return self.dims[degree] if degree < len(self.dims) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def euler(self) -> int:
        return sum(d if i % 2 == 0 else -d for i, d in enumerate(self.dims))


def projective_space_cohomology(n: int) -> GradedDims:
    """H^*(P^n, C): one dimension in each even degree 0, 2, ..., 2n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return GradedDims(tuple(1 if i % 2 == 0 else 0 for i in range(2 * n + 1)))


def graded_tensor(a: GradedDims | Iterable[int], b: GradedDims | Iterable[int]) -> GradedDims:
    """Convolution product: result[n] = sum_{i+j=n} a[i]*b[j]."""
    da = tuple(a)
    db = tuple(b)
    if not da or not db:
        return GradedDims(())
    out = [0] * (len(da) + len(db) - 1)
    for i, x in enumerate(da):
        if x == 0:
            continue
        for j, y in enumerate(db):
            out[i + j] += x * y
    return GradedDims(tuple(out))


def ext_dims_on_X(
    surface: K3Surface, v: MukaiVector, w: MukaiVector, same_object: bool
) -> GradedDims:
    """Ext table between stable sheaves of equal slope with vectors v and w.

    The caller asserts stability and slope equality; same_object=True
    additionally requires v = w, while same_object=False means two
    non-isomorphic sheaves (which may share the same Mukai vector).
    """
    if same_object:
        if v != w:
            raise ValueError("same_object=True requires identical Mukai vectors")
        ext1 = mukai_square(surface, v) + 2
        if ext1 < 0:
            raise NegativeExt(
                f"ext^1 = v^2 + 2 = {ext1} is negative: no such simple sheaf exists"
            )
        return GradedDims((1, ext1, 1))
    ext1 = mukai_pairing(surface, v, w)
    if ext1 < 0:
        raise NegativeExt(
            f"ext^1 = <v, w> = {ext1} is negative: no such pair of stable sheaves exists"
        )
    return GradedDims((0, ext1, 0))


def ext_dims_on_hilb(
    surface: K3Surface,
    v: MukaiVector,
    w: MukaiVector,
    k: int,
    same_object: bool,
) -> GradedDims:
    """Ext table between the images on X^[k]: the table on X times H^*(P^(k-1))."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return graded_tensor(
        ext_dims_on_X(surface, v, w, same_object),
        projective_space_cohomology(k - 1),
    )


def moduli_dim(surface: K3Surface, v: MukaiVector) -> int:
    """Dimension v^2 + 2 of the moduli space of stable sheaves with vector v."""
    v_sq = mukai_square(surface, v)
    if v_sq < -2:
        raise ValueError(f"v^2 = {v_sq} < -2: the moduli space is empty")
    return v_sq + 2


class TangentMatch(NamedTuple):
    dim_X: int
    dim_hilb: int
    match: bool


def tangent_match(surface: K3Surface, v: MukaiVector, k: int) -> TangentMatch:
    """Compare moduli tangent dimensions on X and on X^[k].

    Both equal ext^1: degree 1 is odd and H^*(P^(k-1)) is concentrated in
    even degrees, so the convolution leaves the degree-1 entry untouched
    and the match holds for every valid input.
    """
    dim_x = moduli_dim(surface, v)
    dim_hilb = ext_dims_on_hilb(surface, v, v, k, same_object=True)[1]
    return TangentMatch(dim_x, dim_hilb, dim_x == dim_hilb)

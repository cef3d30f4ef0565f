"""Admissibility verdicts for a candidate (surface, Mukai vector, k).

A candidate v = (r, m*h, s) is admissible when

  * v is primitive in the sense m = 1,
  * the moduli space M_{X,h}(v) is nonempty (v^2 >= -2),
  * the section-count inequality chi >= v^2/2 + (r+1)k + 1 holds,
  * every classified sheaf is locally free (v^2 + 2 < 2r), and
  * the moduli space is fine (gcd of rank, degree and chi is 1).

The module also computes the Euler pairing chi(G, G) of the extension
sheaf G of the ideal sheaf of k points by the dual bundle, two independent
ways, as an arithmetic self-check of the inequality's role: admissibility
forces chi(G, G) >= 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lattice import (
    K3Surface,
    MukaiVector,
    dual_vector,
    euler_char,
    euler_pair,
    ideal_sheaf_vector,
    mukai_square,
    twisted_chi,
)


class HypothesisNotMet(ValueError):
    """A certificate was requested outside the hypotheses that justify it."""


class InconsistentCertificate(ValueError):
    """The requested certificate would contain a negative section count."""


@dataclass(frozen=True)
class AdmissibilityReport:
    """All intermediate quantities and verdicts for one candidate.

    Every field is a pure function of (h^2, k, r, m, s); the verdicts can be
    recomputed independently from the check_* functions below.
    """

    chi: int
    v_sq: int
    threshold: int
    margin: int
    nonempty_ok: bool
    ineq_ok: bool
    locally_free_ok: bool
    fine_ok: bool
    gcd_triple: tuple[int, int, int]
    gcd_value: int
    primitive_ok: bool

    @property
    def admissible(self) -> bool:
        return (
            self.primitive_ok
            and self.nonempty_ok
            and self.ineq_ok
            and self.locally_free_ok
            and self.fine_ok
        )


def _require_positive_rank(v: MukaiVector) -> None:
    if v.r < 1:
        raise ValueError(f"rank must be positive, got r={v.r}")


def _require_positive_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def check_inequality(
    surface: K3Surface, v: MukaiVector, k: int
) -> tuple[bool, int]:
    """Section-count inequality chi >= v^2/2 + (r+1)k + 1.

    Returns (verdict, margin) with margin = chi - threshold; the division
    by 2 is exact because v^2 is even.
    """
    _require_positive_rank(v)
    _require_positive_k(k)
    chi = euler_char(v)
    threshold = mukai_square(surface, v) // 2 + (v.r + 1) * k + 1
    margin = chi - threshold
    return margin >= 0, margin


def check_local_freeness(surface: K3Surface, v: MukaiVector) -> bool:
    """True iff v^2 + 2 < 2r, so every sheaf in M_{X,h}(v) is locally free."""
    _require_positive_rank(v)
    return mukai_square(surface, v) + 2 < 2 * v.r


def check_fineness(surface: K3Surface, v: MukaiVector) -> tuple[bool, int]:
    """Fineness of M_{X,h}(v) via gcd(r, c1.h, chi) = 1.

    This is the standard sufficient criterion; it is implied by the shortcut
    gcd(r, s) = 1 since gcd(r, s) = gcd(r, r+s).
    """
    _require_positive_rank(v)
    g = gcd(v.r, v.m * surface.h_squared, euler_char(v))
    return g == 1, g


def check_nonempty(surface: K3Surface, v: MukaiVector) -> bool:
    """Nonemptiness of M_{X,h}(v) for primitive v of positive rank: v^2 >= -2."""
    _require_positive_rank(v)
    if v.m != 1:
        raise ValueError(
            f"nonemptiness criterion is stated only for m = 1, got m={v.m}"
        )
    return mukai_square(surface, v) >= -2


def admissibility_report(
    surface: K3Surface, v: MukaiVector, k: int
) -> AdmissibilityReport:
    """Evaluate every condition on (surface, v, k) and collect the verdicts.

    The raw bound v^2 >= -2 is recorded for any m so that non-primitive
    candidates still get a full report; primitivity itself is the separate
    primitive_ok flag, and admissibility requires all five verdicts.
    """
    _require_positive_rank(v)
    _require_positive_k(k)
    chi = euler_char(v)
    v_sq = mukai_square(surface, v)
    ineq_ok, margin = check_inequality(surface, v, k)
    fine_ok, gcd_value = check_fineness(surface, v)
    return AdmissibilityReport(
        chi=chi,
        v_sq=v_sq,
        threshold=chi - margin,
        margin=margin,
        nonempty_ok=v_sq >= -2,
        ineq_ok=ineq_ok,
        locally_free_ok=check_local_freeness(surface, v),
        fine_ok=fine_ok,
        gcd_triple=(v.r, v.m * surface.h_squared, chi),
        gcd_value=gcd_value,
        primitive_ok=v.m == 1,
    )


def extension_euler_formula(surface: K3Surface, v: MukaiVector, k: int) -> int:
    """chi(G, G) for the extension sheaf G, in closed form.

    G extends the ideal sheaf of k points by the dual of a bundle with
    vector v, and chi(G, G) = 2*(-v^2/2 + chi - (r+1)k + 1).
    """
    _require_positive_k(k)
    v_sq = mukai_square(surface, v)
    return 2 * (-(v_sq // 2) + euler_char(v) - (v.r + 1) * k + 1)


def extension_euler_direct(surface: K3Surface, v: MukaiVector, k: int) -> int:
    """chi(G, G) computed directly from v(G) = v(dual) + v(ideal sheaf).

    Must agree with extension_euler_formula on every input; the test suite
    checks the identity on an exhaustive grid.
    """
    _require_positive_k(k)
    v_g = dual_vector(v) + ideal_sheaf_vector(k)
    return euler_pair(surface, v_g, v_g)


def vanishing_certificate(
    surface: K3Surface, v: MukaiVector, k: int
) -> tuple[int, int, int]:
    """Cohomology dimensions (h^0, h^1, h^2) of the twist by an ideal sheaf.

    Under the section-count inequality (and m = 1) the higher cohomology of
    E tensor I_Z vanishes, so h^0 = chi = r + s - rk.

    Raises HypothesisNotMet when the inequality fails or m != 1, and
    InconsistentCertificate when the section count would be negative.
    """
    _require_positive_rank(v)
    _require_positive_k(k)
    if v.m != 1:
        raise HypothesisNotMet(f"vanishing certificate requires m = 1, got m={v.m}")
    ok, margin = check_inequality(surface, v, k)
    if not ok:
        raise HypothesisNotMet(
            f"section-count inequality fails with margin {margin}"
        )
    h0 = twisted_chi(v, k)
    if h0 < 0:
        raise InconsistentCertificate(
            f"section count r+s-rk = {h0} is negative"
        )
    return h0, 0, 0

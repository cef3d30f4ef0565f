"""Complete, deterministic enumeration of admissible Mukai vectors (r, h, s).

Only primitive first Chern class (m = 1) is enumerated.  Two cheap
necessary consequences of the conditions confine the search to a finite
box for each (h^2, k):

  * nonemptiness gives v^2 = h^2 - 2rs >= -2, so 2rs <= h^2 + 2;
  * feeding v^2 >= -2 into the section-count inequality gives
    chi = r + s >= (r+1)k, so s >= r(k-1) + k.

Hence r(r(k-1) + k) <= (h^2 + 2)/2 bounds r, and for each r the component
s lies in [r(k-1) + k, floor((h^2+2)/(2r))].  Every point of the box is
then tested with the exact predicates, so the pruning cannot admit a
false positive; completeness of the bounds is checked against a raw
brute-force scan in the test suite.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .certificate import Certificate, build_certificate
from .conditions import AdmissibilityReport, admissibility_report
from .lattice import K3Surface, MukaiVector


class InvalidQuery(ValueError):
    """The search query has an empty, odd-aligned or non-positive range."""


def _as_range(value: int | tuple[int, int]) -> tuple[int, int]:
    if isinstance(value, tuple):
        lo, hi = value
    else:
        lo = hi = value
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise InvalidQuery(f"range endpoints must be integers, got {value!r}")
    if lo > hi:
        raise InvalidQuery(f"empty range {lo}-{hi}")
    return lo, hi


@dataclass(frozen=True)
class SearchQuery:
    """Search space: h^2 value or inclusive even range, k value or range.

    r_max, when given, overrides the derived rank ceiling; it exists for
    completeness audits (raising it must never add hits) and restriction
    experiments.
    """

    h_squared: int | tuple[int, int]
    k: int | tuple[int, int]
    r_max: int | None = None

    def __post_init__(self) -> None:
        h_lo, h_hi = _as_range(self.h_squared)
        if h_lo < 2 or h_lo % 2 != 0 or h_hi % 2 != 0:
            raise InvalidQuery(
                f"h_squared range must be positive and even-aligned, got {h_lo}-{h_hi}"
            )
        k_lo, _ = _as_range(self.k)
        if k_lo < 1:
            raise InvalidQuery(f"k must be positive, got {k_lo}")
        if self.r_max is not None and self.r_max < 1:
            raise InvalidQuery(f"r_max override must be positive, got {self.r_max}")

    def h2_values(self) -> Iterator[int]:
        lo, hi = _as_range(self.h_squared)
        return iter(range(lo, hi + 1, 2))

    def k_values(self) -> Iterator[int]:
        lo, hi = _as_range(self.k)
        return iter(range(lo, hi + 1))


@dataclass(frozen=True)
class SearchHit:
    """One admissible vector with its report and full certificate."""

    h_squared: int
    k: int
    v: MukaiVector
    report: AdmissibilityReport
    certificate: Certificate


def search_bounds(
    surface: K3Surface, k: int
) -> tuple[int, Callable[[int], tuple[int, int]]]:
    """Rank ceiling and per-rank inclusive s-interval containing all hits.

    Returns (r_max, s_range) with s_range(r) = (r(k-1) + k,
    floor((h^2+2)/(2r))).  The interval may be empty (lo > hi) for r
    beyond r_max; r_max may be 0 when no rank admits a nonempty interval.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    half = (surface.h_squared + 2) // 2

    def s_range(r: int) -> tuple[int, int]:
        return r * (k - 1) + k, half // r

    r_max = 0
    r = 1
    while r * (r * (k - 1) + k) <= half:
        r_max = r
        r += 1
    return r_max, s_range


def _scan_cell(args: tuple[int, int, int | None]) -> list[tuple[int, int]]:
    """Admissible (r, s) pairs for one (h^2, k) cell; pure, picklable worker."""
    h_squared, k, r_cap = args
    surface = K3Surface(h_squared)
    derived_r_max, s_range = search_bounds(surface, k)
    r_max = derived_r_max if r_cap is None else r_cap
    found: list[tuple[int, int]] = []
    for r in range(1, r_max + 1):
        lo, hi = s_range(r)
        for s in range(lo, hi + 1):
            if admissibility_report(surface, MukaiVector(r, 1, s), k).admissible:
                found.append((r, s))
    return found


def enumerate_hits(query: SearchQuery, workers: int = 1) -> list[SearchHit]:
    """All admissible vectors in the query box, ordered by (h^2, k, r, s).

    The candidate grid is embarrassingly parallel; results are merged and
    canonically sorted, so the output is identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    cells = [(h2, k, query.r_max) for h2 in query.h2_values() for k in query.k_values()]
    if workers == 1 or len(cells) <= 1:
        per_cell = [_scan_cell(cell) for cell in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_cell = list(pool.map(_scan_cell, cells))

    hits: list[SearchHit] = []
    for (h2, k, _), pairs in zip(cells, per_cell):
        surface = K3Surface(h2)
        for r, s in pairs:
            v = MukaiVector(r, 1, s)
            cert = build_certificate(surface, v, k)
            hits.append(SearchHit(h2, k, v, cert.report, cert))
    hits.sort(key=lambda h: (h.h_squared, h.k, h.v.r, h.v.s))
    return hits

"""Base segment construction for the regular 2n-gon.

The base set holds the 2n perimeter edges plus the n(n-2) diagonals that
run parallel to a side. Every diagonal connects corners (e-k) and (e+1+k)
and is parallel to the side (e, e+1); each of the n side directions
carries n-2 such diagonals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import Point2, Segment


@dataclass(frozen=True)
class PolygonSpec:
    """Regular polygon with an even number 2n of sides."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")

    @property
    def N(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class DiagonalCensus:
    """Closed-form diagonal counts for one polygon."""

    parallel: int
    total: int
    excluded: int
    per_direction: int
    directions: int


def corners(spec: PolygonSpec) -> list[Point2]:
    """The 2n corners on the unit circle, corner k at angle pi*k/n."""
    n = spec.n
    return [Point2(math.cos(math.pi * k / n), math.sin(math.pi * k / n)) for k in range(2 * n)]


def base_segments(spec: PolygonSpec) -> list[Segment]:
    """Perimeter edges followed by the side-parallel diagonals.

    Corner indices are reduced mod 2n before the corner lookup, so shared
    endpoints are bit-identical between segments.
    """
    n = spec.n
    pts = corners(spec)
    segs = [Segment(pts[e], pts[(e + 1) % (2 * n)]) for e in range(2 * n)]
    for e in range(n):
        for k in range(1, n - 1):
            segs.append(Segment(pts[(e - k) % (2 * n)], pts[(e + 1 + k) % (2 * n)]))
    return segs


def diagonal_census(spec: PolygonSpec) -> DiagonalCensus:
    """Evaluate the diagonal count formulas for the polygon."""
    n = spec.n
    return DiagonalCensus(
        parallel=n * (n - 2),
        total=n * (2 * n - 3),
        excluded=n * (n - 1),
        per_direction=n - 2,
        directions=n,
    )

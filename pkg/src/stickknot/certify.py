"""Equilateral certification of approximately unit-edge polygons.

A polygon with edge lengths close enough to 1 relative to its non-adjacent
edge clearance admits a true equilateral realization of the same knot type;
the report records how much slack the inequality has.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import Polygon, edge_lengths, min_nonadjacent_edge_distance


@dataclass(frozen=True)
class EquilateralReport:
    n: int
    mu: float
    max_deviation: float
    threshold: float
    margin_exponent: float
    certified: bool

    def as_kv(self) -> str:
        return "\n".join(
            [
                f"n={self.n}",
                f"mu={self.mu!r}",
                f"max_deviation={self.max_deviation!r}",
                f"threshold={self.threshold!r}",
                f"margin_exponent={self.margin_exponent!r}",
                f"certified={str(self.certified).lower()}",
            ]
        )


def certify_equilateral(p: Polygon) -> EquilateralReport:
    """Check max_i |L_i - 1| < min(mu/n, mu^2/4) in double precision.

    Edges are compared against target length 1, not the mean edge length.
    mu = 0 (a self-intersecting polygon) yields threshold 0 and a negative
    verdict; n <= 3 propagates the no-non-adjacent-edges error.
    """
    lens = edge_lengths(p)
    mu = min_nonadjacent_edge_distance(p)
    dev = float(max(abs(lens - 1.0)))
    threshold = min(mu / p.n, mu * mu / 4.0)
    if dev == 0.0:
        margin = -math.inf
    elif threshold == 0.0:
        margin = math.inf
    else:
        margin = math.log10(dev / threshold)
    return EquilateralReport(
        n=p.n,
        mu=mu,
        max_deviation=dev,
        threshold=threshold,
        margin_exponent=margin,
        certified=dev < threshold,
    )

"""Polygonal knot analysis: certification, identification, superbridge."""

from .certify import EquilateralReport, certify_equilateral
from .geometry import (
    Polygon,
    edge_lengths,
    load_polygon,
    load_polygon_file,
    min_nonadjacent_edge_distance,
    normalize,
    project_orthographic,
    segment_distance,
)
from .invariants import (
    KnotTable,
    LaurentPoly2,
    build_table,
    homfly,
    identify,
    load_reference_table,
)

__version__ = "0.1.0"

"""Closed 3D polygons: parsing, edge geometry, normalization, projection.

Vertices are unit-free real coordinates.  Edge i runs from vertex i to
vertex (i+1) mod n; closure is implicit and never stored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometry, InputError


@dataclass(frozen=True, eq=False)
class Polygon:
    """Immutable closed polygonal curve in 3-space."""

    vertices: np.ndarray  # shape (n, 3), read-only

    def __post_init__(self):
        arr = np.asarray(self.vertices, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise InputError(f"expected an (n, 3) vertex array, got shape {arr.shape}")
        if arr.shape[0] < 3:
            raise InputError(f"too few vertices: need at least 3, got {arr.shape[0]}")
        diffs = np.roll(arr, -1, axis=0) - arr
        lens = np.linalg.norm(diffs, axis=1)
        if np.any(lens == 0.0):
            bad = int(np.argmin(lens))
            raise InputError(f"coincident consecutive vertices at index {bad}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "vertices", arr)

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    def edge_vectors(self) -> np.ndarray:
        """Edge i as vertex[i+1] - vertex[i], cyclically; shape (n, 3)."""
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)


def load_polygon(text: str) -> Polygon:
    """Parse a coordinate file: one vertex per line, three decimals, '#' comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InputError(f"line {lineno}: expected 3 numbers, got {len(parts)}")
        try:
            rows.append([float(x) for x in parts])
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    if len(rows) < 3:
        raise InputError(f"too few vertices: need at least 3, got {len(rows)}")
    return Polygon(np.array(rows))


def load_polygon_file(path) -> Polygon:
    with open(path, encoding="utf-8") as fh:
        return load_polygon(fh.read())


def parse_integer_vertices(text: str) -> list[tuple[int, int, int]]:
    """Parse a coordinate file whose entries must all be exact integers."""
    verts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InputError(f"line {lineno}: expected 3 numbers, got {len(parts)}")
        try:
            verts.append(tuple(int(x) for x in parts))
        except ValueError as exc:
            raise InputError(f"line {lineno}: non-integer coordinate ({exc})") from exc
    if len(verts) < 3:
        raise InputError(f"too few vertices: need at least 3, got {len(verts)}")
    return verts


def edge_lengths(p: Polygon) -> np.ndarray:
    """Length of edge (i, i+1 mod n) for each i."""
    return np.linalg.norm(p.edge_vectors(), axis=1)


def segment_distance(p1, q1, p2, q2) -> float:
    """Minimum distance between segments [p1,q1] and [p2,q2].

    Clamped closest-point parametrization with a dedicated branch for
    (near-)parallel segments.
    """
    p1 = np.asarray(p1, dtype=float)
    q1 = np.asarray(q1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    d1 = q1 - p1
    d2 = q2 - p2
    r = p1 - p2
    a = float(d1 @ d1)
    e = float(d2 @ d2)
    f = float(d2 @ r)

    if a == 0.0 and e == 0.0:
        return float(np.linalg.norm(r))
    if a == 0.0:
        t = min(1.0, max(0.0, f / e))
        return float(np.linalg.norm(p1 - (p2 + t * d2)))
    c = float(d1 @ r)
    if e == 0.0:
        s = min(1.0, max(0.0, -c / a))
        return float(np.linalg.norm(p1 + s * d1 - p2))

    b = float(d1 @ d2)
    denom = a * e - b * b
    # Parallel (or numerically parallel) segments: optimum is attained at an
    # endpoint of one of the two segments.
    if denom <= 1e-14 * a * e:
        cands = []
        for pt, seg_p, seg_d, seg_len2 in (
            (p1, p2, d2, e),
            (q1, p2, d2, e),
            (p2, p1, d1, a),
            (q2, p1, d1, a),
        ):
            t = min(1.0, max(0.0, float((pt - seg_p) @ seg_d) / seg_len2))
            cands.append(float(np.linalg.norm(pt - (seg_p + t * seg_d))))
        return min(cands)

    s = min(1.0, max(0.0, (b * f - c * e) / denom))
    t = (b * s + f) / e
    if t < 0.0:
        t = 0.0
        s = min(1.0, max(0.0, -c / a))
    elif t > 1.0:
        t = 1.0
        s = min(1.0, max(0.0, (b - c) / a))
    return float(np.linalg.norm((p1 + s * d1) - (p2 + t * d2)))


def min_nonadjacent_edge_distance(p: Polygon) -> float:
    """Minimum distance over all cyclically non-adjacent edge pairs.

    Zero signals self-intersection.  A triangle has no such pairs.
    """
    n = p.n
    if n <= 3:
        raise DegenerateGeometry("no non-adjacent edges: polygon has n <= 3")
    v = p.vertices
    best = np.inf
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue  # cyclically adjacent
            d = segment_distance(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])
            if d < best:
                best = d
    return float(best)


def normalize(p: Polygon) -> Polygon:
    """Apply the rigid motion placing vertex 0 at the origin, vertex 1 on the
    positive x-axis, and vertex 2 in the z=0 plane with positive y.

    Rotation only (determinant +1): chirality is preserved.
    """
    v = p.vertices
    e1 = v[1] - v[0]
    n1 = np.linalg.norm(e1)
    x_axis = e1 / n1
    w = v[2] - v[0]
    y_raw = w - (w @ x_axis) * x_axis
    n2 = np.linalg.norm(y_raw)
    if n2 <= 1e-12 * max(1.0, np.linalg.norm(w)):
        raise DegenerateGeometry("degenerate frame: first three vertices are collinear")
    y_axis = y_raw / n2
    z_axis = np.cross(x_axis, y_axis)
    rot = np.stack([x_axis, y_axis, z_axis])  # rows form an orthonormal +1 frame
    return Polygon((v - v[0]) @ rot.T)


def plane_basis(axis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed orthonormal basis (u, v, w) with w along axis.

    u is built from the coordinate axis least aligned with `axis`
    (lowest index on ties), so axis=+z yields u=x, v=y.
    """
    a = np.asarray(axis, dtype=float)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        raise DegenerateGeometry("zero projection axis")
    w = a / norm
    k = int(np.argmin(np.abs(w)))
    seed = np.zeros(3)
    seed[k] = 1.0
    u = seed - (seed @ w) * w
    u /= np.linalg.norm(u)
    v = np.cross(w, u)
    return u, v, w


def project_orthographic(p: Polygon, axis) -> np.ndarray:
    """Orthographic vertex projection onto the plane orthogonal to axis.

    Returns an (n, 2) array of coordinates in the plane_basis(axis) frame;
    for axis=+z this is just (x, y).
    """
    u, v, _ = plane_basis(axis)
    return p.vertices @ np.stack([u, v]).T


def projection_depths(p: Polygon, axis) -> np.ndarray:
    """Per-vertex depth along the (normalized) axis; larger = nearer the viewer."""
    _, _, w = plane_basis(axis)
    return p.vertices @ w

"""Generic orthographic projection of a polygon to a knot diagram.

A projection is generic when no vertex lands on another edge's image, all
edge intersections are transverse double points away from endpoints, and
the two strands at each crossing are separated in depth.  Genericity is
checked to a fixed tolerance; callers can perturb the axis when it fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonGenericProjection
from .geometry import Polygon, plane_basis
from .linkdiag import Diagram

GENERIC_TOL = 1e-9

PDCode = tuple  # tuple of (a, b, c, d) arc 4-tuples


@dataclass(frozen=True)
class Crossing:
    over_edge: int
    under_edge: int
    over_param: float
    under_param: float
    position: tuple[float, float]
    sign: int


def _cross2(a, b) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def project_to_diagram(p: Polygon, axis) -> tuple[list[Crossing], PDCode]:
    """Extract the crossings and PD code of the projection along axis.

    Raises NonGenericProjection naming the degeneracy when the direction
    fails a genericity test; the polygon itself is never modified.
    """
    u, v, w = plane_basis(axis)
    pts = p.vertices @ np.stack([u, v]).T
    depth = p.vertices @ w
    n = p.n
    scale = float(np.max(np.ptp(pts, axis=0))) if n else 1.0
    tol = GENERIC_TOL * max(1.0, scale)

    d2 = np.roll(pts, -1, axis=0) - pts
    seg_len = np.linalg.norm(d2, axis=1)
    for i in range(n):
        if seg_len[i] <= tol:
            raise NonGenericProjection(f"edge {i} projects to a point")

    # vertex-versus-edge clearance (covers tangencies and hits at endpoints)
    for k in range(n):
        for j in range(n):
            if j == k or (j + 1) % n == k:
                continue
            rel = pts[k] - pts[j]
            t = float(rel @ d2[j]) / float(d2[j] @ d2[j])
            t = min(1.0, max(0.0, t))
            if float(np.linalg.norm(rel - t * d2[j])) < tol:
                raise NonGenericProjection(
                    f"vertex {k} projects onto edge {j}"
                )

    crossings: list[Crossing] = []
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            denom = _cross2(d2[i], d2[j])
            r = pts[j] - pts[i]
            if abs(denom) <= tol * seg_len[i] * seg_len[j] / max(1.0, scale):
                if adjacent:
                    continue
                # parallel: any genuine overlap was caught by the vertex scan
                continue
            s = _cross2(r, d2[j]) / denom
            t = _cross2(r, d2[i]) / denom
            mi = tol / seg_len[i]
            mj = tol / seg_len[j]
            if s < -mi or s > 1 + mi or t < -mj or t > 1 + mj:
                continue
            if adjacent:
                # shared-endpoint contact only; interior hits were excluded
                # by the vertex scan
                continue
            if s < mi or s > 1 - mi or t < mj or t > 1 - mj:
                raise NonGenericProjection(
                    f"edges {i} and {j} intersect at an endpoint"
                )
            hi = float(depth[i] + s * (depth[(i + 1) % n] - depth[i]))
            hj = float(depth[j] + t * (depth[(j + 1) % n] - depth[j]))
            if abs(hi - hj) < tol:
                raise NonGenericProjection(
                    f"edges {i} and {j} are not depth-separated at their crossing"
                )
            pos = pts[i] + s * d2[i]
            if hi > hj:
                over, under = i, j
                over_param, under_param = s, t
            else:
                over, under = j, i
                over_param, under_param = t, s
            sign = 1 if _cross2(d2[over], d2[under]) > 0 else -1
            crossings.append(
                Crossing(
                    over_edge=over,
                    under_edge=under,
                    over_param=float(over_param),
                    under_param=float(under_param),
                    position=(float(pos[0]), float(pos[1])),
                    sign=sign,
                )
            )

    for a in range(len(crossings)):
        for b in range(a + 1, len(crossings)):
            dx = crossings[a].position[0] - crossings[b].position[0]
            dy = crossings[a].position[1] - crossings[b].position[1]
            if dx * dx + dy * dy < tol * tol:
                raise NonGenericProjection("triple point in projection")

    crossings.sort(key=lambda c: (c.under_edge, c.under_param))
    return crossings, _pd_code(crossings, n)


def _pd_code(crossings: list[Crossing], n: int) -> PDCode:
    """Arc labels 1..2c along the polygon's orientation from vertex 0."""
    if not crossings:
        return ()
    passages = []  # (edge, param, crossing index, is_over)
    for idx, c in enumerate(crossings):
        passages.append((c.over_edge, c.over_param, idx, True))
        passages.append((c.under_edge, c.under_param, idx, False))
    passages.sort(key=lambda t: (t[0], t[1]))
    total = len(passages)
    labels: dict[tuple[int, bool], tuple[int, int]] = {}
    for k, (_, _, idx, is_over) in enumerate(passages):
        labels[(idx, is_over)] = (k + 1, (k + 1) % total + 1)
    code = []
    for idx, c in enumerate(crossings):
        a, under_out = labels[(idx, False)]
        over_in, over_out = labels[(idx, True)]
        if c.sign > 0:
            code.append((a, over_out, under_out, over_in))
        else:
            code.append((a, over_in, under_out, over_out))
    return tuple(code)


def perturb_axis_until_generic(p: Polygon, axis, seed: int) -> np.ndarray:
    """Return axis itself when generic, else a nearby generic direction.

    The result stays within 0.01 rad of the input and is deterministic in
    the seed.  Gives up after 1000 candidates.
    """
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    try:
        project_to_diagram(p, a)
        return a
    except NonGenericProjection:
        pass
    rng = np.random.default_rng(seed)
    for attempt in range(1000):
        g = rng.normal(size=3)
        norm = np.linalg.norm(g)
        if norm == 0.0:
            continue
        radius = 0.002 + 0.007 * (attempt / 999.0)
        cand = a + radius * (g / norm)
        cand /= np.linalg.norm(cand)
        if np.arccos(np.clip(cand @ a, -1.0, 1.0)) > 0.01:
            continue
        try:
            project_to_diagram(p, cand)
            return cand
        except NonGenericProjection:
            continue
    raise NonGenericProjection(
        "no generic direction found within 0.01 rad after 1000 attempts"
    )


def simplify_diagram(pd: PDCode) -> PDCode:
    """Reduce a PD code by untwist and parallel-cancel moves only."""
    code = tuple(tuple(cr) for cr in pd)
    if not code:
        return ()
    d = Diagram.from_pd(code)
    d.simplify()
    return d.to_pd()


def diagram_writhe(crossings: list[Crossing]) -> int:
    return sum(c.sign for c in crossings)

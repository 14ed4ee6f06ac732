"""Random closed equilateral polygons in spherical confinement.

Metropolis chain over crankshaft moves (dihedral rotations about a chord):
closure and unit edge lengths are preserved exactly by every move, and a
proposal is accepted iff the rotated polygon still fits in the confinement
ball around its own centroid.  Drift from accumulated rounding is squeezed
back below 1e-12 periodically and before every emitted sample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometry, InputError, StickKnotError
from .geometry import Polygon

RENORM_INTERVAL = 10_000
EDGE_TOL = 1e-12
CLOSURE_ABORT = 1e-9
# chain proposals stay this far inside the ball so renormalization can
# never push an emitted sample out of confinement
CONFINE_MARGIN = 1e-9


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    radius: float
    seed: int
    burn_in: int = 1000
    stride: int = 100

    def __post_init__(self):
        if self.n < 3:
            raise InputError(f"n must be >= 3, got {self.n}")
        if self.radius < 0.5:
            raise InputError(
                "radius must be >= 0.5: no closed unit-edge polygon fits in "
                "a smaller ball around its centroid"
            )
        if self.burn_in < 1 or self.stride < 1:
            raise InputError("burn_in and stride must be >= 1")


def _rotation_matrix(axis: np.ndarray, angle: float) -> np.ndarray:
    u = axis / np.linalg.norm(axis)
    x, y, z = u
    c, s = np.cos(angle), np.sin(angle)
    cc = 1.0 - c
    return np.array(
        [
            [c + x * x * cc, x * y * cc - z * s, x * z * cc + y * s],
            [y * x * cc + z * s, c + y * y * cc, y * z * cc - x * s],
            [z * x * cc - y * s, z * y * cc + x * s, c + z * z * cc],
        ]
    )


def _crankshaft(verts: np.ndarray, i: int, j: int, angle: float) -> None:
    axis = verts[j] - verts[i]
    rot = _rotation_matrix(axis, angle)
    block = verts[i + 1 : j]
    verts[i + 1 : j] = (block - verts[i]) @ rot.T + verts[i]


def crankshaft_step(p: Polygon, i: int, j: int, angle: float) -> Polygon:
    """Rotate the vertices strictly between i and j about the chord (i, j).

    Closure and all edge lengths are preserved exactly (up to rounding).
    """
    n = p.n
    if not 0 <= i < j < n:
        raise InputError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    if np.array_equal(p.vertices[i], p.vertices[j]):
        raise DegenerateGeometry("coincident axis endpoints")
    verts = p.vertices.copy()
    _crankshaft(verts, i, j, angle)
    return Polygon(verts)


def _renormalize(verts: np.ndarray) -> None:
    """Force unit edges, then repair closure; iterate to joint tolerance."""
    n = len(verts)
    for _ in range(4):
        for k in range(n - 1):
            e = verts[k + 1] - verts[k]
            verts[k + 1] = verts[k] + e / np.linalg.norm(e)
        gap = verts[0] - (
            verts[n - 1]
            + (verts[0] - verts[n - 1]) / np.linalg.norm(verts[0] - verts[n - 1])
        )
        if np.linalg.norm(gap) > CLOSURE_ABORT:
            raise StickKnotError(
                "edge renormalization produced a closure correction beyond 1e-9"
            )
        # spread the closing correction linearly along the chain
        ramp = np.linspace(0.0, 1.0, n, endpoint=False)[:, None]
        verts += ramp * gap
        lens = np.linalg.norm(np.roll(verts, -1, axis=0) - verts, axis=1)
        if np.max(np.abs(lens - 1.0)) <= EDGE_TOL:
            return
    raise StickKnotError("edge renormalization failed to reach 1e-12")


def _max_centroid_dist(verts: np.ndarray) -> float:
    centroid = verts.mean(axis=0)
    return float(np.max(np.linalg.norm(verts - centroid, axis=1)))


def _regular_polygon(n: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    r = 0.5 / np.sin(np.pi / n)
    verts = np.stack([r * np.cos(theta), r * np.sin(theta), np.zeros(n)]).T
    return verts - verts.mean(axis=0)


def random_confined_polygon_stream(cfg: SamplerConfig):
    """Deterministic (per seed) stream of confined equilateral polygons.

    Raises if the requested radius proves unreachable after a bounded
    shrinking schedule rather than looping forever.
    """
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n
    verts = _regular_polygon(n)
    target = cfg.radius - CONFINE_MARGIN

    def attempt(radius_now: float) -> bool:
        a, b = rng.integers(0, n, size=2)
        i, j = (int(min(a, b)), int(max(a, b)))
        if j - i < 2:
            return False
        angle = rng.uniform(-np.pi, np.pi)
        block = verts[i + 1 : j].copy()
        _crankshaft(verts, i, j, angle)
        if _max_centroid_dist(verts) <= radius_now:
            return True
        verts[i + 1 : j] = block
        return False

    start_r = _max_centroid_dist(verts) * (1.0 + 1e-9)
    if start_r > target:
        # shrink the ball gradually, starting with generous slack so the
        # flat initial polygon can fold into 3D before compression bites
        r_now = max(start_r, target) * 1.25
        stuck = 0
        total = 0
        while r_now > target:
            if attempt(r_now):
                excess = (r_now - target) * 0.995
                r_now = target if excess < 1e-9 else target + excess
                stuck = 0
            else:
                stuck += 1
            total += 1
            if stuck > 100_000 or total > 5_000_000:
                raise StickKnotError(
                    f"confinement radius {cfg.radius} looks infeasible for "
                    f"n={cfg.n}: no progress after {total} attempts"
                )

    accepted = 0
    steps = 0
    while True:
        if attempt(target):
            accepted += 1
            if accepted % RENORM_INTERVAL == 0:
                _renormalize(verts)
        steps += 1
        if steps >= cfg.burn_in and (steps - cfg.burn_in) % cfg.stride == 0:
            _renormalize(verts)
            yield Polygon(verts)


def sample_polygons(cfg: SamplerConfig, count: int) -> list[Polygon]:
    """First `count` samples of the stream (convenience wrapper)."""
    out = []
    stream = random_confined_polygon_stream(cfg)
    for _ in range(count):
        out.append(next(stream))
    return out

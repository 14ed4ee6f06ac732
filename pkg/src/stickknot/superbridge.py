"""Exact superbridge numbers and alternation certificates.

The superbridge number of a polygon is the maximum, over directions v, of
the number of cyclic +/- sign changes in (v.e_1, ..., v.e_n).  The sign
vector is constant on each open cell of the arrangement of the n great
circles {v : v.e_i = 0}, every cell of which touches an arrangement vertex
e_i x e_j, so sweeping the angular sectors around all vertices visits every
cell.  Candidate maxima are certified by an exact rational LP that also
decides the Gordan alternative for integer polygons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DegenerateGeometry, InputError, NonGenericDirection
from .geometry import Polygon

ZERO_TOL = 1e-12
CIRCLE_TOL = 1e-9


@dataclass(frozen=True)
class SbResult:
    value: int
    witness_direction: np.ndarray
    cell_count: int


@dataclass(frozen=True)
class GordanCertificate:
    u: tuple[int, ...]


@dataclass(frozen=True)
class GordanResult:
    branch: str  # "alternating" or "certificate"
    direction: tuple[Fraction, Fraction, Fraction] | None
    certificate: GordanCertificate | None


def local_maxima_count(p: Polygon, v) -> int:
    """Local maxima of the projection of the polygon to the line along v."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise NonGenericDirection("zero direction")
    v = v / norm
    edges = p.edge_vectors()
    dots = edges @ v
    lens = np.linalg.norm(edges, axis=1)
    if np.any(np.abs(dots) <= ZERO_TOL * lens):
        k = int(np.argmin(np.abs(dots) / lens))
        raise NonGenericDirection(f"direction is orthogonal to edge {k}")
    return _transitions(dots > 0)


def _transitions(pos) -> int:
    """Cyclic count of +,- sign changes in a boolean (positive) sequence."""
    nxt = np.roll(pos, -1)
    return int(np.count_nonzero(pos & ~nxt))


def _sector_rays(tangents):
    """Distinct rays among the given nonzero 2D integer/float vectors."""
    rays = []
    for t in tangents:
        for r in (t, (-t[0], -t[1])):
            for q in rays:
                if q[0] * r[1] - q[1] * r[0] == 0 and q[0] * r[0] + q[1] * r[1] > 0:
                    break
            else:
                rays.append(r)
    return rays


def _angle_key(r):
    x, y = float(r[0]), float(r[1])
    return np.arctan2(y, x)


def _cells_at_vertex(edges, w, circle_idx, dots_w):
    """Sign vectors of the angular sectors around arrangement vertex w.

    edges and w are sequences of Python numbers (ints stay exact).
    circle_idx: indices k with w.e_k == 0; dots_w: precomputed w.e_k.
    """
    i0 = circle_idx[0]
    b1 = edges[i0]
    b2 = _cross(w, b1)
    tangents = []
    for k in circle_idx:
        t = _cross(w, edges[k])
        tangents.append((_dot(t, b1), _dot(t, b2)))
    rays = _sector_rays(tangents)
    rays.sort(key=_angle_key)
    cells = []
    m = len(rays)
    for a in range(m):
        r1, r2 = rays[a], rays[(a + 1) % m]
        probe2 = (r1[0] + r2[0], r1[1] + r2[1])
        probe = tuple(probe2[0] * b1[c] + probe2[1] * b2[c] for c in range(3))
        signs = []
        for k, e in enumerate(edges):
            d = dots_w[k] if k not in circle_idx else _dot(probe, e)
            signs.append(d > 0)
        cells.append((signs, probe))
    return cells


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def superbridge_number(p: Polygon) -> SbResult:
    """Exact maximum of local_maxima_count over all generic directions."""
    verts = p.vertices
    integral = bool(np.all(verts == np.round(verts)))
    if integral:
        vlist = [tuple(int(x) for x in row) for row in verts]
    else:
        vlist = [tuple(float(x) for x in row) for row in verts]
    n = len(vlist)
    edges = [
        tuple(vlist[(i + 1) % n][c] - vlist[i][c] for c in range(3))
        for i in range(n)
    ]
    lens = [float(np.linalg.norm(e)) for e in edges]

    def near_zero(x, scale):
        if integral:
            return x == 0
        return abs(x) <= CIRCLE_TOL * scale

    cell_count = 0
    candidates: list[tuple[int, list, tuple]] = []
    any_vertex = False
    for i in range(n):
        for j in range(i + 1, n):
            w = _cross(edges[i], edges[j])
            wnorm = float(np.linalg.norm(w))
            if near_zero(wnorm, lens[i] * lens[j]):
                continue  # parallel pair defines no arrangement vertex
            any_vertex = True
            dots_w = [_dot(w, e) for e in edges]
            circle_idx = [
                k
                for k in range(n)
                if near_zero(dots_w[k], wnorm * lens[k])
            ]
            for signs, probe in _cells_at_vertex(edges, w, circle_idx, dots_w):
                cell_count += 1
                cnt = _transitions(np.array(signs))
                candidates.append((cnt, signs, (w, probe)))
    if not any_vertex:
        raise DegenerateGeometry("all edges are parallel")

    candidates.sort(key=lambda t: -t[0])
    for cnt, signs, (w, probe) in candidates:
        witness = _certified_direction(edges, signs)
        if witness is None:
            continue  # numerically spurious cell
        value = cnt
        wdir = np.array([float(x) for x in witness], dtype=float)
        wdir /= np.linalg.norm(wdir)
        assert 1 <= value <= n // 2
        return SbResult(value=value, witness_direction=wdir, cell_count=cell_count)
    raise DegenerateGeometry("no realizable direction cell found")


def _certified_direction(edges, signs):
    """Exact interior direction of the cell with the given sign vector.

    Solves max t s.t. s_k (v.e_k) >= t, |v_c| <= 1 in rational arithmetic;
    returns v when t* > 0, else None (the sign vector is not realizable).
    """
    cols = []
    for e, s in zip(edges, signs):
        f = 1 if s else -1
        cols.append(tuple(Fraction(x) * f for x in e))
    t_star, v, _ = _alternation_lp(cols)
    if t_star <= 0:
        return None
    return v


def _alternation_lp(cols):
    """max t s.t. v.col_k >= t for all k, |v_c| <= 1.

    Returns (t*, v, y) with y the duals of the n alternation rows.
    t* is always >= 0 (v = 0, t = 0 is feasible).
    """
    n = len(cols)
    nv = 8  # v split into 6 nonnegatives, t into 2
    A = []
    b = []
    for col in cols:
        # t - v.col <= 0
        row = []
        for c in range(3):
            row.extend([-col[c], col[c]])
        row.extend([Fraction(1), Fraction(-1)])
        A.append(row)
        b.append(Fraction(0))
    for c in range(3):
        for sgn in (1, -1):
            row = [Fraction(0)] * nv
            row[2 * c] = Fraction(sgn)
            row[2 * c + 1] = Fraction(-sgn)
            A.append(row)
            b.append(Fraction(1))
    cvec = [Fraction(0)] * 6 + [Fraction(1), Fraction(-1)]
    value, x, y = _simplex_max(cvec, A, b)
    v = tuple(x[2 * c] - x[2 * c + 1] for c in range(3))
    return value, v, y[:n]


def _simplex_max(c, A, b):
    """Textbook exact simplex with Bland's rule: max c.x, Ax <= b, x >= 0.

    Requires b >= 0 (slack basis start).  Returns (value, x, duals).
    """
    m = len(A)
    nv = len(c)
    T = [list(A[i]) + [Fraction(0)] * m + [b[i]] for i in range(m)]
    for i in range(m):
        T[i][nv + i] = Fraction(1)
    cext = list(c) + [Fraction(0)] * m
    basis = list(range(nv, nv + m))
    while True:
        cb = [cext[bi] for bi in basis]
        enter = -1
        for j in range(nv + m):
            zj = sum(cb[i] * T[i][j] for i in range(m) if T[i][j])
            if cext[j] - zj > 0:
                enter = j
                break  # Bland: smallest improving index
        if enter < 0:
            break
        leave = -1
        best_ratio = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("LP unbounded; malformed input")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                row = T[i]
                lead = T[leave]
                T[i] = [row[k] - f * lead[k] for k in range(nv + m + 1)]
        basis[leave] = enter
    x = [Fraction(0)] * nv
    for i, bi in enumerate(basis):
        if bi < nv:
            x[bi] = T[i][-1]
    value = sum(c[j] * x[j] for j in range(nv))
    cb = [cext[bi] for bi in basis]
    duals = []
    for i in range(m):
        j = nv + i
        zj = sum(cb[r] * T[r][j] for r in range(m) if T[r][j])
        duals.append(zj)  # = y_i for a zero-cost slack column
    return value, x, duals


# -- Gordan certificates (exact integer path) ---------------------------


def alternating_columns(vertices) -> list[tuple[int, int, int]]:
    """Columns e_1, -e_2, e_3, ... of the sign-alternating edge matrix."""
    n = len(vertices)
    cols = []
    for i in range(n):
        e = tuple(vertices[(i + 1) % n][c] - vertices[i][c] for c in range(3))
        if i % 2 == 1:
            e = tuple(-x for x in e)
        cols.append(e)
    return cols


def _check_integer_polygon(vertices, n_even=True):
    for row in vertices:
        for x in row:
            if not isinstance(x, int):
                raise InputError("non-integer coordinates")
    n = len(vertices)
    if n < 3:
        raise InputError("too few vertices")
    if n_even and n % 2 == 1:
        raise InputError(
            "odd edge count: a cyclic sign sequence of odd length cannot "
            "alternate, so the alternation test does not apply"
        )
    return n


def verify_gordan_certificate(vertices, cert: GordanCertificate) -> bool:
    """Exact check that cert.u is a nonzero nonnegative kernel vector of the
    alternating edge matrix; truth implies no direction fully alternates."""
    n = _check_integer_polygon(vertices)
    u = cert.u
    if len(u) != n:
        raise InputError(f"certificate length {len(u)} != {n}")
    if any(x < 0 for x in u) or not any(u):
        return False
    cols = alternating_columns(vertices)
    for c in range(3):
        if sum(col[c] * ui for col, ui in zip(cols, u)) != 0:
            return False
    return True


def find_gordan_certificate(vertices) -> GordanResult:
    """Decide the alternative: an all-positive direction for the alternating
    columns, or a nonnegative integer kernel vector (exactly one exists)."""
    _check_integer_polygon(vertices)
    cols = [tuple(Fraction(x) for x in col) for col in alternating_columns(vertices)]
    t_star, v, y = _alternation_lp(cols)
    if t_star > 0:
        return GordanResult(branch="alternating", direction=v, certificate=None)
    denom = 1
    for yi in y:
        denom = denom * yi.denominator // gcd(denom, yi.denominator)
    u = [int(yi * denom) for yi in y]
    g = 0
    for x in u:
        g = gcd(g, x)
    if g > 1:
        u = [x // g for x in u]
    cert = GordanCertificate(u=tuple(u))
    if not verify_gordan_certificate(vertices, cert):
        raise AssertionError("internal error: dual vector failed verification")
    return GordanResult(branch="certificate", direction=None, certificate=cert)

"""Programmatic construction of reference knot diagrams.

Two generators cover every knot family the bundled identification table
needs: closures of braid words (torus knots) and rational tangles in
continued-fraction twist form (all 2-bridge knots).  Both emit the internal
Diagram type, so no PD-label bookkeeping is exposed.
"""

from __future__ import annotations

from .errors import InputError
from .linkdiag import Diagram

# Scratch arms of a crossing tile, counterclockwise.
_SW, _SE, _NE, _NW = 0, 1, 2, 3


def braid_closure(word, strands: int) -> Diagram:
    """Closure of a braid word on the given number of strands.

    Letters are nonzero ints: +g crosses strand g over strand g+1
    (a positive crossing for upward-oriented strands), -g the reverse.
    """
    if strands < 2:
        raise InputError("need at least 2 strands")
    d = Diagram()
    next_eid = 1
    open_out: list = [None] * strands
    start_in: list = [None] * strands
    cid = 0

    def connect(out_ep, in_ep):
        nonlocal next_eid
        d.mate[out_ep] = in_ep
        d.mate[in_ep] = out_ep
        d.eid[out_ep] = d.eid[in_ep] = next_eid
        next_eid += 1

    def feed(pos, in_ep):
        if open_out[pos] is None:
            start_in[pos] = in_ep
        else:
            connect(open_out[pos], in_ep)

    for letter in word:
        g = abs(letter)
        if not 1 <= g <= strands - 1:
            raise InputError(f"bad braid letter {letter} for {strands} strands")
        i = g - 1
        c = cid
        cid += 1
        if letter > 0:
            # arms: SW=over-in(3), SE=under-in(0), NE=over-out(1), NW=under-out(2)
            d.signs[c] = 1
            feed(i, (c, 3))
            feed(i + 1, (c, 0))
            open_out[i] = (c, 2)
            open_out[i + 1] = (c, 1)
        else:
            # arms: SW=under-in(0), SE=over-in(1), NE=under-out(2), NW=over-out(3)
            d.signs[c] = -1
            feed(i, (c, 0))
            feed(i + 1, (c, 1))
            open_out[i] = (c, 3)
            open_out[i + 1] = (c, 2)

    for pos in range(strands):
        if open_out[pos] is None:
            d.loops += 1
        else:
            connect(open_out[pos], start_in[pos])
    return d


class _Tangle:
    """Unoriented 4-valent scratch structure with four open stubs."""

    def __init__(self):
        self.over_diag: dict[int, int] = {}  # 0: SW-NE strand over, 1: SE-NW over
        self.mate: dict[tuple[int, int], tuple[int, int]] = {}
        self.nw = self.ne = self.sw = self.se = None
        self._cid = 0

    def _join(self, a, b):
        self.mate[a] = b
        self.mate[b] = a

    def _new_crossing(self, over_diag: int) -> int:
        c = self._cid
        self._cid += 1
        self.over_diag[c] = over_diag
        return c

    def twist_right(self, over_diag: int) -> None:
        c = self._new_crossing(over_diag)
        if self.ne is not None:
            self._join(self.ne, (c, _NW))
            self._join(self.se, (c, _SW))
        else:  # first crossing: west stubs are the tangle's own NW/SW corners
            self.nw, self.sw = (c, _NW), (c, _SW)
        self.ne = (c, _NE)
        self.se = (c, _SE)

    def twist_bottom(self, over_diag: int) -> None:
        c = self._new_crossing(over_diag)
        self._join(self.sw, (c, _NW))
        self._join(self.se, (c, _NE))
        self.sw = (c, _SW)
        self.se = (c, _SE)

    def numerator_closure(self) -> None:
        self._join(self.nw, self.ne)
        self._join(self.sw, self.se)


def _orient(t: _Tangle) -> Diagram:
    """Walk the closed curve, fixing strand directions and crossing signs."""
    arm_dir: dict[tuple[int, int], bool] = {}  # True = strand enters at this arm
    start = (0, _SW)
    cur = start
    while True:
        arm_dir[cur] = True
        out = (cur[0], (cur[1] + 2) % 4)
        arm_dir[out] = False
        cur = t.mate[out]
        if cur == start:
            break
    if len(arm_dir) != 4 * len(t.over_diag):
        raise InputError("tangle closure is not a single closed curve")

    slot_of: dict[tuple[int, int], int] = {}
    d = Diagram()
    for c, od in t.over_diag.items():
        under_arms = (_SE, _NW) if od == 0 else (_SW, _NE)
        u_in = next(a for a in under_arms if arm_dir[(c, a)])
        for a in range(4):
            slot_of[(c, a)] = (a - u_in) % 4
        over_arms = (_SW, _NE) if od == 0 else (_SE, _NW)
        o_in = next(a for a in over_arms if arm_dir[(c, a)])
        d.signs[c] = 1 if slot_of[(c, o_in)] == 3 else -1

    next_eid = 1
    for ep, other in t.mate.items():
        a = (ep[0], slot_of[ep])
        b = (other[0], slot_of[other])
        if a in d.mate:
            continue
        d.mate[a] = b
        d.mate[b] = a
        d.eid[a] = d.eid[b] = next_eid
        next_eid += 1
    return d


def rational_knot(cf) -> Diagram:
    """Alternating diagram of the 2-bridge knot with continued fraction
    [a1, a2, ...]: value a1 + 1/(a2 + 1/(...)), all terms positive.

    The numerator of the fraction is the knot determinant; the diagram is
    reduced alternating, so its crossing number is exactly sum(cf).
    """
    cf = list(cf)
    if not cf or any(a < 1 for a in cf):
        raise InputError("continued fraction terms must be positive integers")
    if len(cf) % 2 == 0:
        # Same value, odd length: [..., a] == [..., a-1, 1]. The builder
        # needs the tail region horizontal, which forces odd length.
        if cf[-1] < 2:
            raise InputError("even-length fraction must end with a term >= 2")
        cf = cf[:-1] + [cf[-1] - 1, 1]
    t = _Tangle()
    # Tail-first; regions alternate horizontal (odd positions from the
    # head, 1-based) and vertical, so the head region is horizontal.
    for idx in range(len(cf) - 1, -1, -1):
        for _ in range(cf[idx]):
            if idx % 2 == 0:
                t.twist_right(0)
            else:
                t.twist_bottom(0)
    t.numerator_closure()
    return _orient(t)


def continued_fraction_value(cf) -> tuple[int, int]:
    """(numerator, denominator) of a1 + 1/(a2 + 1/(...))."""
    num, den = cf[-1], 1
    for a in reversed(cf[:-1]):
        num, den = a * num + den, num
    return num, den


def torus_knot(p: int, q: int) -> Diagram:
    """The (p, q) torus knot as the closure of (s1 s2 ... s_{p-1})^q."""
    if p < 2 or q < 2:
        raise InputError("need p, q >= 2")
    word = list(range(1, p)) * q
    return braid_closure(word, p)

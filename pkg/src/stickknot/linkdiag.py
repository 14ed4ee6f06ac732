"""Combinatorial link diagrams as 4-valent maps with rotation structure.

A crossing is a vertex with four slots in counterclockwise planar order:

    slot 0: under-strand in          slot 2: under-strand out
    sign +1: over in at 3, out at 1  sign -1: over in at 1, out at 3

Edges pair an out-slot of one crossing with an in-slot of another (possibly
the same) crossing and carry a persistent integer id.  Persistent ids make
strand traversal order stable under crossing switches, which is what the
skein recursion's termination argument leans on.
"""

from __future__ import annotations

from .errors import InputError

UNDER_IN = 0
UNDER_OUT = 2


def over_in_slot(sign: int) -> int:
    return 3 if sign > 0 else 1


def over_out_slot(sign: int) -> int:
    return 1 if sign > 0 else 3


class Diagram:
    """Mutable link diagram; value semantics via copy()."""

    __slots__ = ("signs", "mate", "eid", "loops")

    def __init__(self, signs=None, mate=None, eid=None, loops=0):
        self.signs: dict[int, int] = dict(signs or {})
        self.mate: dict[tuple[int, int], tuple[int, int]] = dict(mate or {})
        self.eid: dict[tuple[int, int], int] = dict(eid or {})
        self.loops = loops

    # -- basics ---------------------------------------------------------

    def copy(self) -> "Diagram":
        return Diagram(self.signs, self.mate, self.eid, self.loops)

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    def in_slots(self, c: int) -> tuple[int, int]:
        return (UNDER_IN, over_in_slot(self.signs[c]))

    def is_in_slot(self, c: int, s: int) -> bool:
        return s == UNDER_IN or s == over_in_slot(self.signs[c])

    def writhe(self) -> int:
        return sum(self.signs.values())

    def validate(self) -> None:
        """Structural sanity checks; used by tests."""
        assert set(self.mate) == {(c, s) for c in self.signs for s in range(4)}
        assert set(self.eid) == set(self.mate)
        for ep, other in self.mate.items():
            assert self.mate[other] == ep and ep != other
            assert self.eid[ep] == self.eid[other]
            # edges run out-slot -> in-slot
            assert self.is_in_slot(*ep) != self.is_in_slot(*other)

    # -- traversal ------------------------------------------------------

    def passages(self) -> list[list[tuple[int, int]]]:
        """Strand passages grouped by component.

        Components are ordered by their smallest edge id and walked from
        the in-endpoint of that edge; the order is invariant under
        crossing switches.
        """
        in_eps = [ep for ep in self.mate if self.is_in_slot(*ep)]
        in_eps.sort(key=lambda ep: self.eid[ep])
        seen: set[tuple[int, int]] = set()
        comps = []
        for start in in_eps:
            if start in seen:
                continue
            comp = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                c, s = cur
                cur = self.mate[(c, (s + 2) % 4)]
            comps.append(comp)
        return comps

    def bad_crossings(self) -> list[int]:
        """Crossings whose first visit along the traversal is an under-passage."""
        first: dict[int, int] = {}
        for comp in self.passages():
            for c, s in comp:
                if c not in first:
                    first[c] = s
        return [c for c, s in first.items() if s == UNDER_IN]

    # -- moves ----------------------------------------------------------

    def switch(self, c: int) -> None:
        """Swap over/under at crossing c (slot relabel, sign flip)."""
        r = 1 if self.signs[c] > 0 else -1
        rename = {(c, s): (c, (s + r) % 4) for s in range(4)}
        self.mate = {
            rename.get(k, k): rename.get(v, v) for k, v in self.mate.items()
        }
        self.eid = {rename.get(k, k): v for k, v in self.eid.items()}
        self.signs[c] = -self.signs[c]

    def mirror(self) -> None:
        for c in list(self.signs):
            self.switch(c)

    def smooth(self, c: int) -> None:
        """Orientation-respecting smoothing of crossing c."""
        sgn = self.signs[c]
        oi, oo = over_in_slot(sgn), over_out_slot(sgn)
        fuse = {
            (c, UNDER_IN): (c, oo),
            (c, oo): (c, UNDER_IN),
            (c, oi): (c, UNDER_OUT),
            (c, UNDER_OUT): (c, oi),
        }
        self._dissolve({c}, fuse)

    def _dissolve(self, removed: set[int], fuse: dict) -> None:
        """Remove crossings, rewiring strands through `fuse` pairs.

        Endpoints of removed crossings absent from `fuse` are excised
        outright (their edges must be internal).  Pure internal cycles
        become free loops.
        """
        eps = {(c, s) for c in removed for s in range(4)}
        handled: set[tuple[int, int]] = set()
        new_pairs = []
        for ep in sorted(eps):
            if ep in handled or ep not in fuse:
                continue
            outside = self.mate[ep]
            if outside in eps:
                continue  # not a chain anchor; reached via a walk below
            ids = [self.eid[ep]]
            x = ep
            while True:
                handled.add(x)
                y = fuse[x]
                handled.add(y)
                z = self.mate[y]
                ids.append(self.eid[y])
                if z not in eps:
                    new_pairs.append((outside, z, min(ids)))
                    break
                if z not in fuse:
                    raise AssertionError("strand exits into an excised edge")
                x = z
        for ep in sorted(eps):
            if ep in handled:
                continue
            if ep not in fuse:
                # excised edge; both ends must be internal
                assert self.mate[ep] in eps
                handled.add(ep)
                continue
            cur = ep
            while True:
                handled.add(cur)
                w = fuse[cur]
                handled.add(w)
                cur = self.mate[w]
                if cur == ep:
                    break
            self.loops += 1
        for c in removed:
            del self.signs[c]
            for s in range(4):
                self.mate.pop((c, s))
                self.eid.pop((c, s))
        for a, b, merged_id in new_pairs:
            self.mate[a] = b
            self.mate[b] = a
            self.eid[a] = merged_id
            self.eid[b] = merged_id

    # -- Reidemeister simplification -------------------------------------

    def _find_kink(self):
        for c in self.signs:
            for s in range(4):
                if self.mate[(c, s)] == (c, (s + 1) % 4):
                    return c, s
        return None

    def _find_r2(self):
        for (c1, s1), (c2, t) in self.mate.items():
            if c1 == c2:
                continue
            s2 = (t + 1) % 4
            if (s1 + s2) % 2 == 0:
                continue  # mixed over/under bigon (a clasp), not R2
            if self.signs[c1] == self.signs[c2]:
                continue
            if self.mate.get((c1, (s1 - 1) % 4)) == (c2, s2):
                return (c1, s1), (c2, s2)
        return None

    def _remove_kink(self, c: int, s: int) -> None:
        s2 = (s + 1) % 4
        rest = [t for t in range(4) if t not in (s, s2)]
        fuse = {(c, rest[0]): (c, rest[1]), (c, rest[1]): (c, rest[0])}
        self._dissolve({c}, fuse)

    def _remove_bigon(self, e1, e2) -> None:
        (c1, s1), (c2, s2) = e1, e2
        fuse = {
            (c1, (s1 + 2) % 4): (c2, (s2 + 1) % 4),
            (c2, (s2 + 1) % 4): (c1, (s1 + 2) % 4),
            (c1, (s1 + 1) % 4): (c2, (s2 + 2) % 4),
            (c2, (s2 + 2) % 4): (c1, (s1 + 1) % 4),
        }
        self._dissolve({c1, c2}, fuse)

    def simplify(self) -> int:
        """Apply untwist (R1) and parallel-cancel (R2) moves to a fixed point.

        Returns the number of crossings removed.  The knot/link type is
        preserved; no triangle (R3) moves are attempted.
        """
        removed = 0
        while True:
            kink = self._find_kink()
            if kink is not None:
                self._remove_kink(*kink)
                removed += 1
                continue
            pair = self._find_r2()
            if pair is not None:
                self._remove_bigon(*pair)
                removed += 2
                continue
            return removed

    # -- faces (used by tests to validate the rotation structure) -------

    def faces(self) -> list[list[tuple[int, int]]]:
        """Orbits of endpoint -> rotate(mate(endpoint)); one orbit per face."""
        out = []
        seen: set[tuple[int, int]] = set()
        for ep in sorted(self.mate):
            if ep in seen:
                continue
            orbit = []
            cur = ep
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                c, s = self.mate[cur]
                cur = (c, (s + 1) % 4)
            out.append(orbit)
        return out

    # -- PD conversion ---------------------------------------------------

    @classmethod
    def from_pd(cls, code) -> "Diagram":
        """Build a diagram from a single-component PD code.

        Arc labels must be 1..2n in orientation order (the label increments
        at every crossing passage), each appearing exactly twice.
        """
        code = [tuple(int(x) for x in cr) for cr in code]
        n = len(code)
        if n == 0:
            return cls(loops=1)
        counts: dict[int, int] = {}
        for cr in code:
            if len(cr) != 4:
                raise InputError(f"crossing {cr} is not a 4-tuple")
            for x in cr:
                counts[x] = counts.get(x, 0) + 1
        if set(counts) != set(range(1, 2 * n + 1)) or set(counts.values()) != {2}:
            raise InputError("arc labels must be 1..2n, each appearing exactly twice")

        def succ(x):
            return x % (2 * n) + 1

        signs = {}
        slot_label = {}
        for i, (a, b, c, d) in enumerate(code):
            if succ(a) != c:
                raise InputError(f"crossing {i}: under-strand labels {a}->{c} not consecutive")
            if succ(d) == b and succ(b) != d:
                signs[i] = 1  # over strand runs d -> b
            elif succ(b) == d:
                signs[i] = -1  # over strand runs b -> d
            else:
                raise InputError(f"crossing {i}: over-strand labels {b},{d} not consecutive")
            slot_label[(i, 0)], slot_label[(i, 1)] = a, b
            slot_label[(i, 2)], slot_label[(i, 3)] = c, d

        dia = cls(signs=signs)
        by_label: dict[int, list[tuple[int, int]]] = {}
        for ep, lab in slot_label.items():
            by_label.setdefault(lab, []).append(ep)
        for lab, (e1, e2) in by_label.items():
            i1 = dia.is_in_slot(*e1)
            if i1 == dia.is_in_slot(*e2):
                raise InputError(f"arc {lab} does not run out-slot to in-slot")
            dia.mate[e1], dia.mate[e2] = e2, e1
            dia.eid[e1] = dia.eid[e2] = lab
        if len(dia.passages()) != 1:
            raise InputError("PD code does not describe a single closed component")
        return dia

    def to_pd(self) -> tuple[tuple[int, int, int, int], ...]:
        """Emit a PD code with fresh labels 1..2n along the deterministic traversal."""
        label: dict[tuple[int, int], int] = {}
        k = 0
        for comp in self.passages():
            for ep in comp:
                k += 1
                label[ep] = k
                label[self.mate[ep]] = k
        out = []
        for c in sorted(self.signs):
            out.append(tuple(label[(c, s)] for s in range(4)))
        return tuple(out)


def pd_to_text(code) -> str:
    """Bracketed 4-tuple serialization: one crossing per bracket."""
    return " ".join("[%d,%d,%d,%d]" % tuple(cr) for cr in code)


def pd_from_text(text: str):
    """Parse the bracketed 4-tuple form."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.replace("] ", "]").split("]"):
        if not chunk:
            continue
        chunk = chunk.strip().lstrip("[")
        parts = [p for p in chunk.replace(",", " ").split() if p]
        if len(parts) != 4:
            raise InputError(f"bad PD crossing {chunk!r}")
        out.append(tuple(int(p) for p in parts))
    return tuple(out)

"""HOMFLY polynomial via skein recursion, and knot identification tables.

Skein convention:  a*P(L+) - a^{-1}*P(L-) = z*P(L0),  P(unknot) = 1.
A split unknot component multiplies by delta = (a - a^{-1}) z^{-1}.
"""

from __future__ import annotations

import os
from importlib import resources

from .errors import InputError, ResourceLimit
from .linkdiag import Diagram, pd_from_text, pd_to_text

DEFAULT_SKEIN_BUDGET = 16
_BUDGET_ENV = "STICKKNOT_SKEIN_BUDGET"


class LaurentPoly2:
    """Two-variable integer Laurent polynomial in (a, z).

    Immutable; exact coefficient arithmetic; no zero coefficients stored.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms=None):
        d = {}
        for (i, j), c in (terms or {}).items():
            if c:
                d[(int(i), int(j))] = int(c)
        self._terms = d
        self._key = tuple(sorted(d.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, a_exp: int, z_exp: int) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    def items(self):
        return self._key

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, 0) + c
        return LaurentPoly2(d)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        d: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + c1 * c2
        return LaurentPoly2(d)

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentPoly2.one()
        for _ in range(k):
            out = out * self
        return out

    def mirror(self) -> "LaurentPoly2":
        """Image under a -> -a^{-1} (the HOMFLY of the mirror diagram)."""
        return LaurentPoly2(
            {(-i, j): (c if i % 2 == 0 else -c) for (i, j), c in self._terms.items()}
        )

    def evaluate(self, a, z):
        out = 0
        for (i, j), c in self._terms.items():
            out += c * a**i * z**j
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*a^{i}*z^{j}" for (i, j), c in self._key)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return cls.zero()
        d = {}
        for part in text.split(" + "):
            coeff, apow, zpow = part.split("*")
            i = int(apow.split("^")[1])
            j = int(zpow.split("^")[1])
            d[(i, j)] = d.get((i, j), 0) + int(coeff)
        return cls(d)


DELTA = LaurentPoly2({(1, -1): 1, (-1, -1): -1})

_A_M2 = LaurentPoly2.term(1, -2, 0)   # P(L+) = a^-2 P(L-) + a^-1 z P(L0)
_A_M1Z = LaurentPoly2.term(1, -1, 1)
_A_P2 = LaurentPoly2.term(1, 2, 0)    # P(L-) = a^2 P(L+) - a z P(L0)
_NEG_AZ = LaurentPoly2.term(-1, 1, 1)


def skein_budget() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_SKEIN_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"bad {_BUDGET_ENV}: {raw!r}") from exc


def _terminal_value(d: Diagram) -> LaurentPoly2 | None:
    """Value of a diagram that is already an unlink, else None."""
    if not d.signs:
        return DELTA ** (d.loops - 1)
    if not d.bad_crossings():
        ncomp = len(d.passages()) + d.loops
        return DELTA ** (ncomp - 1)
    return None


def _pick_skein_crossing(d: Diagram, bad: list[int]) -> int:
    """Greedy choice: the bad crossing whose two skein children simplify best."""
    best = None
    for c in sorted(bad):
        sw = d.copy()
        sw.switch(c)
        sw.simplify()
        sm = d.copy()
        sm.smooth(c)
        sm.simplify()
        score = sw.n_crossings + sm.n_crossings
        if best is None or score < best[0]:
            best = (score, c)
    return best[1]


def homfly_of_diagram(d: Diagram) -> LaurentPoly2:
    """Skein-tree evaluation over an internal diagram (any component count)."""
    total = LaurentPoly2.zero()
    stack = [(d.copy(), LaurentPoly2.one())]
    while stack:
        cur, coef = stack.pop()
        cur.simplify()
        val = _terminal_value(cur)
        if val is not None:
            total = total + coef * val
            continue
        bad = cur.bad_crossings()
        c = _pick_skein_crossing(cur, bad)
        sign = cur.signs[c]
        sw = cur.copy()
        sw.switch(c)
        sm = cur
        sm.smooth(c)
        if sign > 0:
            stack.append((sw, coef * _A_M2))
            stack.append((sm, coef * _A_M1Z))
        else:
            stack.append((sw, coef * _A_P2))
            stack.append((sm, coef * _NEG_AZ))
    return total


def homfly(pd) -> LaurentPoly2:
    """HOMFLY polynomial of a single-component PD code."""
    code = tuple(tuple(cr) for cr in pd)
    budget = skein_budget()
    if len(code) > budget:
        raise ResourceLimit(
            f"crossing budget exceeded: {len(code)} > {budget} "
            f"(raise via {_BUDGET_ENV})"
        )
    return homfly_of_diagram(Diagram.from_pd(code))


MIRROR_SUFFIX = "*"


def base_name(name: str) -> str:
    return name[:-1] if name.endswith(MIRROR_SUFFIX) else name


class KnotTable:
    """Reference HOMFLY values keyed by knot name; mirror-closed.

    Mirror entries carry a '*' suffix; lookups by polynomial report base
    names, so chirality never leaks into identification results.
    """

    def __init__(self, entries: dict[str, LaurentPoly2]):
        self.entries = dict(entries)
        self._by_poly: dict[LaurentPoly2, set[str]] = {}
        for name, poly in self.entries.items():
            self._by_poly.setdefault(poly, set()).add(base_name(name))

    def __len__(self):
        return len(self.entries)

    def base_names(self) -> set[str]:
        return {base_name(n) for n in self.entries}

    def lookup(self, poly: LaurentPoly2) -> set[str]:
        return set(self._by_poly.get(poly, set()))

    def collisions(self) -> list[set[str]]:
        """Groups of distinct base knots sharing one polynomial value."""
        return sorted(
            (names for names in self._by_poly.values() if len(names) > 1),
            key=sorted,
        )


def identify(pd, table: KnotTable) -> set[str]:
    """Base names of all table entries whose polynomial matches the code's."""
    return table.lookup(homfly(pd))


def build_table(source_text: str) -> KnotTable:
    """Compute a KnotTable from a reference file of PD codes.

    One entry per line: `name  [a,b,c,d][...]...`; an empty code is the
    unknot.  Polynomials are computed here by `homfly` itself: the table
    is bootstrapped from diagram data alone.  Mirror images are added
    automatically (suffix '*') whenever they differ.
    """
    entries: dict[str, LaurentPoly2] = {}
    for lineno, raw in enumerate(source_text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        name = parts[0]
        if name in entries:
            raise InputError(f"line {lineno}: duplicate knot name {name!r}")
        if name.endswith(MIRROR_SUFFIX):
            raise InputError(f"line {lineno}: reserved name {name!r}")
        code = pd_from_text(parts[1]) if len(parts) > 1 else ()
        entries[name] = homfly(code)
    for name in list(entries):
        mirrored = entries[name].mirror()
        if mirrored != entries[name]:
            entries[name + MIRROR_SUFFIX] = mirrored
    return KnotTable(entries)


def load_reference_table() -> KnotTable:
    """Build the table from the PD codes shipped with the package."""
    text = resources.files("stickknot.data").joinpath("pd_codes.txt").read_text()
    return build_table(text)


def mirror_pd(pd):
    """PD code of the mirror image (all crossings switched)."""
    d = Diagram.from_pd(tuple(tuple(cr) for cr in pd))
    d.mirror()
    return d.to_pd()


def minimal_projection_pd(polygon, axis=(0.0, 0.0, 1.0), seed: int = 0,
                          max_axes: int = 24, budget: int | None = None):
    """Smallest R1/R2-simplified PD code found over a seeded axis search.

    Tries the given axis first, then deterministic pseudo-random
    directions, returning as soon as a code fits the skein budget.
    """
    import numpy as np

    from .diagram import (
        perturb_axis_until_generic,
        project_to_diagram,
        simplify_diagram,
    )
    from .errors import NonGenericProjection

    if budget is None:
        budget = skein_budget()
    rng = np.random.default_rng(seed)
    best = None
    for k in range(max_axes):
        ax = np.asarray(axis, dtype=float) if k == 0 else rng.normal(size=3)
        try:
            a = perturb_axis_until_generic(polygon, ax, seed=seed + k)
            _, pd = project_to_diagram(polygon, a)
        except NonGenericProjection:
            continue
        spd = simplify_diagram(pd)
        if best is None or len(spd) < len(best[0]):
            best = (spd, a, len(pd))
        if len(spd) <= budget:
            break
    if best is None:
        raise NonGenericProjection("no generic projection found in axis search")
    spd, a, raw = best
    if len(spd) > budget:
        raise ResourceLimit(
            f"no projection within the {budget}-crossing budget; "
            f"best found has {len(spd)}"
        )
    return spd, a, raw


def identify_polygon(polygon, table: KnotTable, axis=(0.0, 0.0, 1.0),
                     seed: int = 0) -> set[str]:
    """Project, simplify, and look the polygon's knot type up in the table."""
    spd, _, _ = minimal_projection_pd(polygon, axis=axis, seed=seed)
    return identify(spd, table)


__all__ = [
    "LaurentPoly2",
    "DELTA",
    "homfly",
    "homfly_of_diagram",
    "identify",
    "KnotTable",
    "build_table",
    "load_reference_table",
    "mirror_pd",
    "base_name",
    "pd_to_text",
    "pd_from_text",
    "skein_budget",
]

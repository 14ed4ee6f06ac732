"""Per-knot bound intervals for stick, equilateral-stick, and superbridge.

Intervals are knowledge intervals [lo, hi].  Since every equilateral
realization is a realization, equilateral-stick knowledge dominates stick
knowledge componentwise; propagation additionally applies the three
standard inequalities relating the invariants:

  sb[K]      <= stick[K] / 2          (vertex count caps critical points)
  sb[K]      <= 3 b[K] - 1            (bridge-index bound)
  stick[K]   <= 3 (cr[K] + 1) / 2     (crossing-number bound, nontrivial K)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from importlib import resources

from .errors import InconsistentBounds, InputError

CSV_HEADER = (
    "knot,cr,bridge,stick_lo,stick_hi,eqstick_lo,eqstick_hi,sb_lo,sb_hi,provenance"
)


@dataclass(frozen=True)
class BoundsEntry:
    knot: str
    crossing_number: int
    bridge_index: int | None
    stick: tuple[int, int]
    eqstick: tuple[int, int]
    sb: tuple[int, int]
    provenance: str = ""

    def __post_init__(self):
        for label, (lo, hi) in (
            ("stick", self.stick),
            ("eqstick", self.eqstick),
            ("sb", self.sb),
        ):
            if lo > hi:
                raise InconsistentBounds(
                    f"{self.knot}: empty {label} interval [{lo}, {hi}]"
                )


def propagate(entry: BoundsEntry) -> BoundsEntry:
    """Tighten upper bounds via the standard inequalities; idempotent."""
    stick_lo, stick_hi = entry.stick
    eq_lo, eq_hi = entry.eqstick
    sb_lo, sb_hi = entry.sb
    b = entry.bridge_index
    cr = entry.crossing_number
    for _ in range(3):
        eq_lo = max(eq_lo, stick_lo)
        stick_hi = min(stick_hi, eq_hi)
        if cr >= 3:
            stick_hi = min(stick_hi, (3 * (cr + 1)) // 2)
        sb_hi = min(sb_hi, stick_hi // 2)
        if b is not None:
            sb_hi = min(sb_hi, 3 * b - 1)
    for label, lo, hi in (
        ("stick", stick_lo, stick_hi),
        ("eqstick", eq_lo, eq_hi),
        ("sb", sb_lo, sb_hi),
    ):
        if lo > hi:
            raise InconsistentBounds(
                f"{entry.knot}: inconsistent data, {label} tightened to "
                f"[{lo}, {hi}]"
            )
    return replace(
        entry,
        stick=(stick_lo, stick_hi),
        eqstick=(eq_lo, eq_hi),
        sb=(sb_lo, sb_hi),
    )


def apply_theorem_result(
    entry: BoundsEntry, new_stick_hi: int, new_eqstick_hi: int
) -> BoundsEntry:
    """Lower the stick/eqstick upper bounds monotonically, then propagate."""
    if new_stick_hi < entry.stick[0]:
        raise InconsistentBounds(
            f"{entry.knot}: new stick bound {new_stick_hi} is below the "
            f"lower bound {entry.stick[0]}"
        )
    if new_eqstick_hi < entry.eqstick[0]:
        raise InconsistentBounds(
            f"{entry.knot}: new eqstick bound {new_eqstick_hi} is below the "
            f"lower bound {entry.eqstick[0]}"
        )
    out = replace(
        entry,
        stick=(entry.stick[0], min(entry.stick[1], new_stick_hi)),
        eqstick=(entry.eqstick[0], min(entry.eqstick[1], new_eqstick_hi)),
    )
    return propagate(out)


def check_conjecture(cr: int, sb_hi: int) -> bool:
    """Is sb_hi <= ceil(cr / 2)?  Only posed for crossing number >= 7."""
    if cr < 7:
        raise InputError(
            f"conjecture scope: hypothesis requires crossing number >= 7, got {cr}"
        )
    return sb_hi <= math.ceil(cr / 2)


def check_torus_conjecture(p: int, q: int) -> bool:
    """Check the conjecture on the (p, q) torus knot from the closed forms
    sb = min(2p, q) and cr = q(p-1)."""
    if not 2 <= p < q:
        raise InputError(f"need 2 <= p < q, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise InputError(f"({p}, {q}) is not coprime")
    cr = q * (p - 1)
    if cr < 7:
        raise InputError(f"conjecture scope: cr = {cr} < 7")
    return min(2 * p, q) <= math.ceil(cr / 2)


def validate_entry(entry: BoundsEntry) -> None:
    """Cross-invariant checks on a propagated entry."""
    if entry.crossing_number >= 3 and entry.bridge_index is not None:
        if entry.sb[0] < entry.bridge_index + 1:
            raise InconsistentBounds(
                f"{entry.knot}: sb lower bound {entry.sb[0]} below "
                f"bridge+1 = {entry.bridge_index + 1}"
            )
    if entry.stick[0] > entry.eqstick[0] or entry.stick[1] > entry.eqstick[1]:
        raise InconsistentBounds(f"{entry.knot}: stick exceeds eqstick")
    if entry.sb[1] > entry.stick[1] // 2:
        raise InconsistentBounds(f"{entry.knot}: sb above half the stick bound")


def load_table(csv_text: str) -> list[BoundsEntry]:
    """Parse the CSV form; enforces eqstick-dominates-stick on load."""
    lines = [ln for ln in csv_text.splitlines() if ln.strip()]
    if not lines:
        return []
    if lines[0].strip() != CSV_HEADER:
        raise InputError(f"bad header: {lines[0]!r}")
    entries = []
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 10:
            raise InputError(f"line {lineno}: expected 10 fields, got {len(parts)}")
        knot = parts[0].strip()
        if knot in seen:
            raise InputError(f"line {lineno}: duplicate knot {knot}")
        seen.add(knot)
        try:
            cr = int(parts[1])
            bridge = int(parts[2]) if parts[2].strip() else None
            nums = [int(x) for x in parts[3:9]]
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
        if nums[2] < nums[0] or nums[3] < nums[1]:
            raise InconsistentBounds(
                f"line {lineno}: {knot}: eqstick interval must dominate stick"
            )
        entries.append(
            BoundsEntry(
                knot=knot,
                crossing_number=cr,
                bridge_index=bridge,
                stick=(nums[0], nums[1]),
                eqstick=(nums[2], nums[3]),
                sb=(nums[4], nums[5]),
                provenance=parts[9].strip(),
            )
        )
    return entries


def emit_table(entries) -> str:
    rows = [CSV_HEADER]
    for e in entries:
        bridge = "" if e.bridge_index is None else str(e.bridge_index)
        rows.append(
            f"{e.knot},{e.crossing_number},{bridge},"
            f"{e.stick[0]},{e.stick[1]},{e.eqstick[0]},{e.eqstick[1]},"
            f"{e.sb[0]},{e.sb[1]},{e.provenance}"
        )
    return "\n".join(rows) + "\n"


def _load_asset(name: str) -> list[BoundsEntry]:
    text = resources.files("stickknot.data").joinpath(name).read_text()
    return load_table(text)


def load_reference_bounds() -> list[BoundsEntry]:
    """Current-knowledge table bundled with the package."""
    return _load_asset("bounds.csv")


def load_prior_bounds() -> list[BoundsEntry]:
    """The same table before the bundled realizations' bounds are applied."""
    return _load_asset("bounds_prior.csv")

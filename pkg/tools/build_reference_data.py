#!/usr/bin/env python3
"""Regenerate src/stickknot/data/pd_codes.txt from first principles.

Every entry is constructed, not transcribed:

- torus knots as braid closures,
- 2-bridge knots from continued-fraction rational tangles (the fraction
  numerator is the determinant, which is verified against the computed
  polynomial before anything is written),
- the bundled polygonal realizations under fixtures/, projected to a
  minimal-crossing generic diagram.

Run from the repository root:  python tools/build_reference_data.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from stickknot.constructions import (  # noqa: E402
    continued_fraction_value,
    rational_knot,
    torus_knot,
)
from stickknot.geometry import load_polygon_file  # noqa: E402
from stickknot.invariants import (  # noqa: E402
    homfly,
    homfly_of_diagram,
    minimal_projection_pd,
)
from stickknot.linkdiag import pd_to_text  # noqa: E402

REPO = pathlib.Path(__file__).resolve().parents[1]

# Continued fractions of the 2-bridge knots shipped in the table. The
# fraction numerator equals the knot determinant; together with the
# diagram's crossing count it pins the standard name.
RATIONAL = {
    "3_1": [3],
    "4_1": [2, 2],
    "5_1": [5],
    "5_2": [3, 2],
    "6_1": [4, 2],
    "6_2": [3, 1, 2],
    "6_3": [2, 1, 1, 2],
    "7_1": [7],
    "7_2": [5, 2],
    "7_3": [3, 4],
    "7_4": [3, 1, 3],
    "7_5": [2, 2, 3],
    "7_6": [2, 2, 1, 2],
    "7_7": [2, 1, 1, 1, 2],
    "8_1": [6, 2],
    "9_1": [9],
    "9_2": [7, 2],
    "10_1": [8, 2],
}

TORUS = {"8_19": (3, 4), "10_124": (3, 5)}

# Polygonal realizations bundled under fixtures/; the file name is the knot.
FIXTURES = [
    "9_18", "10_18", "10_58", "10_66", "10_68", "10_79", "10_80",
    "10_82", "10_84", "10_93", "10_100", "10_152",
]
INTEGER_FIXTURE = "10_37"


def determinant(poly) -> int:
    """|P(a=1, z=2i)| with exact Gaussian-integer arithmetic."""
    re = im = 0
    for (_, j), c in poly.items():
        v = c * (2**j)
        k = j % 4
        if k == 0:
            re += v
        elif k == 1:
            im += v
        elif k == 2:
            re -= v
        else:
            im -= v
    if re and im:
        raise AssertionError("determinant evaluation is not Gaussian-pure")
    return abs(re) + abs(im)


def main() -> None:
    lines = [
        "# Reference PD codes for the bundled identification table.",
        "# One entry per line: name, then the bracketed crossing 4-tuples;",
        "# a bare name is the unknot. Mirror images are derived at load time.",
        "#",
        "# Construction provenance:",
        "#   - 2-bridge entries: rational-tangle continued fractions",
        "#     (determinant == fraction numerator, verified on generation);",
        "#   - 8_19, 10_124: torus braid closures;",
        "#   - remaining entries: projections of the realizations under",
        "#     fixtures/, which carry those labels.",
        "",
        "0_1",
    ]
    polys = {"0_1": homfly(())}

    for name, cf in RATIONAL.items():
        dia = rational_knot(cf)
        pd = dia.to_pd()
        poly = homfly(pd)
        num, _ = continued_fraction_value(cf)
        det = determinant(poly)
        if det != num:
            raise SystemExit(f"{name}: determinant {det} != fraction numerator {num}")
        if dia.n_crossings != sum(cf):
            raise SystemExit(f"{name}: lost crossings in construction")
        polys[name] = poly
        lines.append(f"{name} {pd_to_text(pd)}")

    for name, (p, q) in TORUS.items():
        pd = torus_knot(p, q).to_pd()
        polys[name] = homfly(pd)
        lines.append(f"{name} {pd_to_text(pd)}")

    for name in FIXTURES + [INTEGER_FIXTURE]:
        fname = f"{name}_integer" if name == INTEGER_FIXTURE else name
        poly_path = REPO / "fixtures" / f"{fname}.txt"
        polygon = load_polygon_file(poly_path)
        pd, axis, raw = minimal_projection_pd(polygon, seed=1234, max_axes=40)
        poly = homfly(pd)
        polys[name] = poly
        lines.append(f"{name} {pd_to_text(pd)}")
        print(f"{name}: raw={raw} simplified={len(pd)} axis={axis.round(4).tolist()}")

    names = list(polys)
    clashes = [
        (a, b)
        for i, a in enumerate(names)
        for b in names[i + 1 :]
        if polys[a] == polys[b] or polys[a] == polys[b].mirror()
    ]
    if clashes:
        raise SystemExit(f"reference polynomials collide: {clashes}")

    out = REPO / "src" / "stickknot" / "data" / "pd_codes.txt"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} with {len(polys)} base entries")


if __name__ == "__main__":
    main()

"""Regenerate the shipped arrangement corpus under src/linarr/corpus/.

    python scripts/build_corpus.py

Every file is checked for the incidence pattern it is meant to have before it
is written. Random choices are seeded, so the output is reproducible.
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from linarr.geometry import Arrangement, GeometryError, Line, intersection_points

sys.path.insert(0, str(Path(__file__).parent))
from find_collinear_configs import general_table, restricted_table, search  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "linarr" / "corpus"


def multiplicities(arr):
    return sorted((p.m for p in intersection_points(arr) if p.m > 2), reverse=True)


def through(label, px, py, slope):
    px, py, slope = Fraction(px), Fraction(py), Fraction(slope)
    return Line(label, slope, py - slope * px)


def random_generic(n, rng):
    while True:
        coeffs = [(Fraction(rng.randint(-20, 20), rng.randint(1, 5)), Fraction(rng.randint(-20, 20), rng.randint(1, 5))) for _ in range(n)]
        try:
            arr = Arrangement.from_coefficients(coeffs)
        except GeometryError:
            continue
        if not multiplicities(arr):
            return arr


def write(name, arr, description, expect_mult, **meta):
    got = multiplicities(arr)
    if got != sorted(expect_mult, reverse=True):
        raise SystemExit(f"{name}: multiplicities {got}, expected {expect_mult}")
    doc = {"description": description, **meta, **arr.to_json()}
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {name}.json  n={arr.n}  multiple={got}")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(1998)
    for n in range(2, 7):
        write(f"generic_{n}", random_generic(n, rng), f"{n} lines in general position", [], family="generic")

    for m in range(3, 7):
        lines = [through(f"P{i}", 1, 2, s) for i, s in enumerate(range(-2, m - 2), 1)]
        write(f"pencil_{m}", Arrangement(tuple(lines)), f"{m} lines through (1, 2)", [m], family="pencil")

    for m in (3, 4):
        lines = [through(f"P{i}", 0, 0, s) for i, s in enumerate(range(1, m + 1), 1)]
        lines.append(Line("G", Fraction(-1, 3), Fraction(5)))
        write(f"near_pencil_{m + 1}", Arrangement(tuple(lines)), f"{m} concurrent lines plus one generic line", [m], family="near_pencil")

    two = [through(f"A{i}", 0, 0, s) for i, s in enumerate((1, 2, 3), 1)]
    two += [through(f"B{i}", 10, 1, s) for i, s in enumerate((-1, -2, Fraction(-1, 2)), 1)]
    write("two_pencils_2_2", Arrangement(tuple(two)), "two transverse pencils of 3 lines (non-collinear multiple points)", [3, 3], family="non_collinear", k=[2, 2])

    for k1, k2 in ((2, 3), (2, 2), (3, 2)):
        arr = search(k1, k2, restricted_table(k1, k2), seed=0, tries=200_000)
        write(f"collinear_restricted_{k1}_{k2}", arr, f"multiple points of multiplicity {k1 + 1} and {k2 + 1} on a shared line, simple points to the right", [k1 + 1, k2 + 1], family="collinear", table={"kind": "restricted", "k1": k1, "k2": k2})
    for k1, k2, l in ((2, 3, 1), (2, 2, 1), (3, 2, 2)):
        arr = search(k1, k2, general_table(k1, k2, l), seed=0, tries=200_000)
        write(f"collinear_{k1}_{k2}_{l}", arr, f"multiple points of multiplicity {k1 + 1} and {k2 + 1} on a shared line, l = {l}", [k1 + 1, k2 + 1], family="collinear", table={"kind": "general", "k1": k1, "k2": k2, "l": l})

    three = [Line("L", 0, 0)]
    for name, px, slopes in (("A", -6, (1, 3)), ("B", 0, (-2, Fraction(1, 2))), ("C", 7, (-1, Fraction(-7, 2)))):
        three += [through(f"{name}{i}", px, 0, s) for i, s in enumerate(slopes, 1)]
    write("collinear_three_2_2_2", Arrangement(tuple(three)), "three triple points on one line", [3, 3, 3], family="collinear")

    classes = [through(f"A{i}", 0, 0, s) for i, s in enumerate((1, 2, 3), 1)]
    classes += [through(f"B{i}", 10, 3, s) for i, s in enumerate((-1, -2, Fraction(-1, 2)), 1)]
    classes.append(Line("G", Fraction(1, 7), Fraction(-9)))
    write("two_classes_generic_line", Arrangement(tuple(classes)), "two pencils of 3 lines plus a line meeting everything simply", [3, 3], family="mixed")

    tri = [Line("T1", 0, 0), Line("T2", 1, 0), Line("T3", -1, 4)]
    tri += [through("V1", 0, 0, 3), through("V2", 4, 0, -3), through("V3", 2, 2, Fraction(1, 2))]
    write("triangle_multiple_points", Arrangement(tuple(tri)), "three triple points pairwise joined by lines, not on one line", [3, 3, 3], family="not_covered")

    chain = [Line("A", 0, 0), Line("B", 1, -4), through("P1", 0, 0, -1), through("P2", 0, 0, 2)]
    chain += [through("Q1", 4, 0, -2), through("R1", 6, 2, Fraction(-1, 3)), through("R2", 6, 2, 5)]
    write("chain_three_points", Arrangement(tuple(chain)), "three triple points forming a path A-B (a tree class with no common line)", [3, 3, 3], family="not_covered")


if __name__ == "__main__":
    main()

"""Search for rational arrangements realizing the two-collinear-points pair tables.

Lines: a connecting line L plus k1 lines through one point of L and k2 lines
through another. Random slopes are drawn until the Lefschetz pairs of the
arrangement equal the requested table row for row.

    python scripts/find_collinear_configs.py --k1 2 --k2 3            # restricted case
    python scripts/find_collinear_configs.py --k1 2 --k2 3 --l 1      # general case
"""

from __future__ import annotations

import argparse
import json
import random
from fractions import Fraction

from linarr.geometry import Arrangement, GeometryError, Line, lefschetz_pairs


def restricted_table(k1, k2):
    rows = [(k1 - l + i - 1, k1 - l + i) for l in range(k1) for i in range(1, k2 + 1)]
    return rows + [(k2 + 1, k1 + k2 + 1), (1, k2 + 1)]


def general_table(k1, k2, l):
    rows = [(l - i + j, l - i + j + 1) for i in range(l) for j in range(1, k1 + 1)]
    rows += [(1, k1 + 1), (k1 + 1, k1 + k2 + 1)]
    rows += [(k1 + i - j + 1, k1 + i - j + 2) for i in range(k2 - l) for j in range(1, k1 + 1)]
    return rows


def rand_q(rng, lo, hi, den=4):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def candidate(rng, k1, k2):
    slope_l = rand_q(rng, -1, 1)
    p1x, p2x = sorted(rand_q(rng, -12, 12) for _ in range(2))
    if p1x == p2x:
        return None
    lines = [Line("L", slope_l, 0)]
    for name, px, k in (("A", p1x, k1), ("B", p2x, k2)):
        py = slope_l * px
        for i in range(1, k + 1):
            s = rand_q(rng, -8, 8)
            lines.append(Line(f"{name}{i}", s, py - s * px))
    try:
        return Arrangement(tuple(lines))
    except GeometryError:
        return None


def search(k1, k2, table, seed, tries):
    rng = random.Random(seed)
    n = k1 + k2 + 1
    for _ in range(tries):
        arr = candidate(rng, k1, k2) if rng.random() < 0.5 else candidate(rng, k2, k1)
        if arr is None:
            continue
        try:
            pts = lefschetz_pairs(arr)
        except GeometryError:
            continue
        if len(pts) != len(table) or any(p.m > 2 and p.m not in (k1 + 1, k2 + 1) for p in pts):
            continue
        if [tuple(p.pair) for p in pts] == table and arr.n == n:
            return arr
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--k1", type=int, required=True)
    ap.add_argument("--k2", type=int, required=True)
    ap.add_argument("--l", type=int, default=None, help="omit for the restricted table")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=200_000)
    args = ap.parse_args()
    table = restricted_table(args.k1, args.k2) if args.l is None else general_table(args.k1, args.k2, args.l)
    arr = search(args.k1, args.k2, table, args.seed, args.tries)
    if arr is None:
        raise SystemExit("no arrangement found")
    print(json.dumps(arr.to_json(), indent=1))


if __name__ == "__main__":
    main()

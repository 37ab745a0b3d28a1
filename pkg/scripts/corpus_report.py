"""Print structure, abelianization and probe hom counts for every corpus file.

    python scripts/corpus_report.py [--probe s3] [--projective]
"""

from __future__ import annotations

import argparse

from linarr import corpus
from linarr.classify import classify
from linarr.presentation import AFFINE, PROJECTIVE, BudgetExceeded, abelianization, hom_count, load_probe, reference_presentation
from linarr.vankampen import ECONOMICAL, FULL, compute_presentation


def count(p, g):
    try:
        return str(hom_count(p, g))
    except BudgetExceeded:
        return "-"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--probe", default="s3")
    ap.add_argument("--projective", action="store_true")
    args = ap.parse_args()
    mode = PROJECTIVE if args.projective else AFFINE
    g = load_probe(args.probe)
    print(f"{'file':28s} {'n':>2s} {'structure':24s} {'ab':>3s} {'full':>8s} {'econ':>8s} {'oracle':>8s}")
    for name in corpus.names():
        arr = corpus.load(name)
        rep = classify(arr, mode)
        full = compute_presentation(arr, mode, FULL).presentation
        econ = compute_presentation(arr, mode, ECONOMICAL).presentation
        oracle = count(reference_presentation(rep.structure), g) if rep.covered else "n/a"
        label = str(rep.structure) if rep.covered else "not covered"
        print(f"{name:28s} {arr.n:2d} {label:24s} {abelianization(econ)[0]:3d} {count(full, g):>8s} {count(econ, g):>8s} {oracle:>8s}")


if __name__ == "__main__":
    main()

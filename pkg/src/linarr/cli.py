"""Command-line front end.

    linarr analyze       FILE...   singular points, Lefschetz pairs, classes
    linarr presentation  FILE...   relations of the fundamental group
    linarr structure     FILE...   closed-form group when every class is collinear
    linarr verify        FILE...   invariant checks, one pass/fail line each

Exit codes: 1 parse error, 2 geometry error, 3 NotCovered (structure only),
4 verification failure. With several files the largest code wins.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from .braid import BraidWord, braid_equal, full_twist_word, induced_permutation
from .classify import NotCovered, classify
from .geometry import ArrangementParseError, GeometryError, InternalInconsistency, load_arrangement
from .presentation import (
    AFFINE,
    PROJECTIVE,
    BudgetExceeded,
    FiniteGroup,
    abelianization,
    hom_count,
    load_probe,
    reference_presentation,
)
from .vankampen import ECONOMICAL, FULL, compute_presentation

EXIT_OK, EXIT_PARSE, EXIT_GEOMETRY, EXIT_NOT_COVERED, EXIT_VERIFY = 0, 1, 2, 3, 4
COMMANDS = ("analyze", "presentation", "structure", "verify")


@dataclass
class RunConfig:
    inputs: list[str]
    command: str
    mode: str = AFFINE
    method: str = ECONOMICAL
    fmt: str = "plain"
    probe: str = "s3"
    normalize: bool = True

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in ("plain", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class FileReport:
    path: str
    code: int = EXIT_OK
    data: dict = field(default_factory=dict)
    text: str = ""


# -- verification suite ------------------------------------------------------

def verify_checks(arr, mode: str, probe: FiniteGroup, normalize: bool = True) -> list[Check]:
    """Invariant checks on the pipeline output for one arrangement."""
    full = compute_presentation(arr, mode, FULL, normalize)
    econ = compute_presentation(arr, mode, ECONOMICAL, normalize)
    points, braids, n = full.analyzed.points, full.braids, arr.n
    checks = []

    product = BraidWord(n)
    for b in braids:
        product = product * b
    checks.append(_check("full_twist", braid_equal(product, full_twist_word(n)), f"{len(braids)} monodromy braids"))

    bad = [p.j for p, b in zip(points, braids) if induced_permutation(b) != tuple(range(1, n + 1))]
    checks.append(_check("pure_braids", not bad, f"non-pure at points {bad}" if bad else ""))

    bad = [p.j for p, b in zip(points, braids) if b.exponent_sum() != p.m * (p.m - 1)]
    total = sum(b.exponent_sum() for b in braids)
    checks.append(_check("exponent_sums", not bad and total == n * (n - 1), f"total {total}, expected {n * (n - 1)}"))

    expected = n - 1 if mode == PROJECTIVE else n
    for label, res in ((FULL, full), (ECONOMICAL, econ)):
        rank, torsion = abelianization(res.presentation)
        ok = rank == expected and not torsion
        checks.append(_check(f"abelianization_{label}", ok, f"rank {rank}, torsion {torsion}, expected rank {expected}"))

    try:
        hf, he = hom_count(full.presentation, probe), hom_count(econ.presentation, probe)
        checks.append(_check(f"economical_equals_full[{probe.name}]", hf == he, f"{he} vs {hf}"))
    except BudgetExceeded as exc:
        hf = None
        checks.append(Check(f"economical_equals_full[{probe.name}]", "skip", str(exc)))

    report = classify(arr, mode)
    if not report.covered:
        checks.append(Check("structure_oracle", "skip", "not covered"))
    elif hf is None:
        checks.append(Check("structure_oracle", "skip", "probe budget exceeded"))
    else:
        hr = hom_count(reference_presentation(report.structure), probe)
        checks.append(_check(f"structure_oracle[{probe.name}]", hr == hf, f"{report.structure}: {hr} vs {hf}"))
    return checks


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, "pass" if ok else "fail", detail)


# -- per-command reports -------------------------------------------------------

def _analyze(arr, cfg: RunConfig) -> FileReport:
    analyzed = compute_presentation(arr, cfg.mode, cfg.method, cfg.normalize).analyzed
    report = classify(arr, cfg.mode)
    pts = [
        {"j": p.j, "x": str(p.x), "y": str(p.y), "m": p.m, "lines": sorted(p.incident), "pair": [p.pair.k, p.pair.l]}
        for p in analyzed.points
    ]
    data = {
        "n": arr.n,
        "shear": str(analyzed.shear.c),
        "base_order": list(analyzed.base_order),
        "points": pts,
        "classes": [c.to_json() for c in report.graph.classes],
        "simple_only_lines": sorted(report.graph.simple_only_lines),
    }
    lines = [f"lines: {arr.n}", f"shear: (x, y) -> (x + {analyzed.shear.c}*y, y)"]
    lines.append("base fiber order (bottom to top): " + " ".join(analyzed.base_order))
    for p in pts:
        lines.append(f"  j={p['j']:<3} x={p['x']:<10} y={p['y']:<10} m={p['m']}  pair=({p['pair'][0]},{p['pair'][1]})  {' '.join(p['lines'])}")
    for c in report.graph.classes:
        tag = f"collinear via {c.connecting_line}" if c.connecting_line else ("collinear" if c.collinear else "NOT collinear")
        lines.append(f"class {c.id}: {len(c.points)} point(s), {tag}")
    lines.append("simple-only lines: " + (" ".join(sorted(report.graph.simple_only_lines)) or "none"))
    return FileReport("", EXIT_OK, data, "\n".join(lines))


def _presentation(arr, cfg: RunConfig) -> FileReport:
    res = compute_presentation(arr, cfg.mode, cfg.method, cfg.normalize)
    pres = res.presentation
    data = {"shear": str(res.analyzed.shear.c), "method": cfg.method, **pres.to_json()}
    header = f"# {cfg.method} {cfg.mode} presentation, shear c = {res.analyzed.shear.c}"
    return FileReport("", EXIT_OK, data, header + "\n" + pres.to_text().rstrip("\n"))


def _structure(arr, cfg: RunConfig) -> FileReport:
    report = classify(arr, cfg.mode)
    data = report.to_json()
    if not report.covered:
        bad = next(c for c in report.graph.classes if not c.collinear)
        err = NotCovered(bad.id, f"class {bad.id} ({len(bad.points)} multiple points) has no common line")
        data["error"] = {"type": "NotCovered", "class_id": bad.id, "message": str(err)}
        return FileReport("", EXIT_NOT_COVERED, data, f"NotCovered: {err}")
    classes, simple = len(report.graph.classes), len(report.graph.simple_only_lines)
    data["decomposition"] = {"classes": classes, "simple_only_lines": simple}
    text = f"{report.structure}\nfree_ranks: {list(report.structure.free_ranks)}\nabelian_rank: {report.structure.abelian_rank}"
    if cfg.mode == AFFINE:
        text += f"\nabelian_rank = {classes} classes + {simple} simple-only lines"
    return FileReport("", EXIT_OK, data, text)


def _verify(arr, cfg: RunConfig) -> FileReport:
    checks = verify_checks(arr, cfg.mode, load_probe(cfg.probe), cfg.normalize)
    failed = any(c.status == "fail" for c in checks)
    data = {"checks": [c.to_json() for c in checks], "passed": not failed}
    text = "\n".join(f"{c.status.upper():4s} {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in checks)
    return FileReport("", EXIT_VERIFY if failed else EXIT_OK, data, text)


HANDLERS: dict[str, Callable] = {
    "analyze": _analyze,
    "presentation": _presentation,
    "structure": _structure,
    "verify": _verify,
}


def run_file(path: str, cfg: RunConfig) -> FileReport:
    try:
        arr = load_arrangement(path)
    except ArrangementParseError as exc:
        rep = FileReport(path, EXIT_PARSE, {"error": {"type": "ParseError", "message": str(exc)}}, f"parse error: {exc}")
        return rep
    except GeometryError as exc:
        return FileReport(path, EXIT_GEOMETRY, {"error": {"type": type(exc).__name__, "message": str(exc)}}, f"geometry error: {exc}")
    try:
        rep = HANDLERS[cfg.command](arr, cfg)
    except (GeometryError, InternalInconsistency) as exc:
        return FileReport(path, EXIT_GEOMETRY, {"error": {"type": type(exc).__name__, "message": str(exc)}}, f"geometry error: {exc}")
    rep.path = path
    return rep


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    reports = [run_file(p, cfg) for p in cfg.inputs]
    if cfg.fmt == "json":
        doc = {
            "command": cfg.command,
            "mode": cfg.mode,
            "method": cfg.method,
            "reports": [{"file": r.path, "exit_code": r.code, **r.data} for r in reports],
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for r in reports:
            if len(reports) > 1:
                out.write(f"== {r.path} ==\n")
            out.write(r.text + "\n")
    return max((r.code for r in reports), default=EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linarr", description="Fundamental groups of real line arrangement complements.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="+", metavar="FILE", help="arrangement JSON files")
    ap.add_argument("--projective", action="store_true", help="complement in CP^2 instead of C^2")
    method = ap.add_mutually_exclusive_group()
    method.add_argument("--full", dest="method", action="store_const", const=FULL, help="all braid-fixedness relations")
    method.add_argument("--economical", dest="method", action="store_const", const=ECONOMICAL, help="local relations only (default)")
    ap.set_defaults(method=ECONOMICAL)
    ap.add_argument("--format", dest="fmt", choices=("plain", "json"), default="plain")
    ap.add_argument("--probe", default="s3", help="s3, s4, d4, z2xz2 or a group table file (verify only)")
    ap.add_argument("--no-normalize", dest="normalize", action="store_false", help="fail with NotGeneric instead of shearing")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        inputs=args.inputs,
        command=args.command,
        mode=PROJECTIVE if args.projective else AFFINE,
        method=args.method,
        fmt=args.fmt,
        probe=args.probe,
        normalize=args.normalize,
    )
    try:
        load_probe(cfg.probe)
    except (OSError, ValueError) as exc:
        print(f"cannot load probe group {cfg.probe!r}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

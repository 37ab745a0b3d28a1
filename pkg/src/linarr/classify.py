"""Combinatorial classification and the closed-form group structure.

Multiple points (multiplicity >= 3) are joined when they share a line of the
arrangement; the connected components are the equivalence classes. When every
class has one line through all its points, the group is

    affine:      F^{m_1-1} + ... + F^{m_k-1} + Z^{n - sum(m_i - 1)}
    projective:  the same with one fewer Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import Arrangement, SingularPoint, intersection_points
from .presentation import AFFINE, PROJECTIVE, GroupStructure


class NotCovered(ValueError):
    def __init__(self, class_id: int, message: str = ""):
        super().__init__(message or f"class {class_id} is not collinear")
        self.class_id = class_id


class NotTransverse(ValueError):
    pass


@dataclass(frozen=True)
class PointClass:
    id: int
    points: tuple[SingularPoint, ...]
    lines: frozenset[str]
    connecting_line: str | None  # None for a singleton class
    collinear: bool

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "points": [{"x": str(p.x), "y": str(p.y), "m": p.m} for p in self.points],
            "lines": sorted(self.lines),
            "connecting_line": self.connecting_line,
            "collinear": self.collinear,
        }


@dataclass(frozen=True)
class MultiplePointGraph:
    vertices: tuple[SingularPoint, ...]
    edges: tuple[tuple[int, int], ...]  # indices into vertices
    classes: tuple[PointClass, ...]
    simple_only_lines: frozenset[str]


def build_classes(points: Sequence[SingularPoint], lines: Sequence[str]) -> MultiplePointGraph:
    verts = tuple(sorted((p for p in points if p.m >= 3), key=lambda p: (p.x, p.y)))
    edges = tuple(
        (a, b)
        for a in range(len(verts))
        for b in range(a + 1, len(verts))
        if verts[a].incident & verts[b].incident
    )
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in edges:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for i in range(len(verts)):
        groups.setdefault(find(i), []).append(i)

    classes = []
    for cid, members in enumerate(sorted(groups.values()), 1):
        pts = tuple(verts[i] for i in members)
        through_all = frozenset.intersection(*(p.incident for p in pts))
        connecting = min(through_all) if (len(pts) > 1 and through_all) else None
        classes.append(
            PointClass(
                id=cid,
                points=pts,
                lines=frozenset().union(*(p.incident for p in pts)),
                connecting_line=connecting,
                collinear=bool(through_all),
            )
        )
    used = frozenset().union(*(c.lines for c in classes)) if classes else frozenset()
    return MultiplePointGraph(verts, edges, tuple(classes), frozenset(lines) - used)


@dataclass(frozen=True)
class StructureReport:
    structure: GroupStructure | None
    covered: bool
    big: bool
    graph: MultiplePointGraph
    mode: str
    n: int

    @property
    def class_count(self) -> int:
        return len(self.graph.classes)

    def to_json(self) -> dict:
        out = {
            "free_ranks": list(self.structure.free_ranks) if self.structure else None,
            "abelian_rank": self.structure.abelian_rank if self.structure else None,
            "covered": self.covered,
            "big": self.big,
            "classes": [c.to_json() for c in self.graph.classes],
        }
        return out


def _points(arr: Arrangement) -> list[SingularPoint]:
    return intersection_points(arr)


def classify(arr: Arrangement, mode: str = AFFINE) -> StructureReport:
    """Classes, coverage and (when covered) the group structure, without raising."""
    points = _points(arr)
    graph = build_classes(points, [l.label for l in arr.lines])
    big = any(p.m >= 3 for p in points)
    covered = all(c.collinear for c in graph.classes)
    structure = None
    if covered:
        sigma = sum(p.m - 1 for p in graph.vertices)
        r = arr.n - sigma - (1 if mode == PROJECTIVE else 0)
        structure = GroupStructure(tuple(p.m - 1 for p in graph.vertices), r)
    return StructureReport(structure, covered, big, graph, mode, arr.n)


def structure(arr: Arrangement, mode: str = AFFINE) -> GroupStructure:
    report = classify(arr, mode)
    if not report.covered:
        bad = next(c for c in report.graph.classes if not c.collinear)
        raise NotCovered(bad.id, f"class {bad.id} ({len(bad.points)} multiple points) has no common line")
    return report.structure


def abelian_rank_decomposition(arr: Arrangement) -> tuple[int, int]:
    """(number of classes, number of lines meeting others only in simple points)."""
    graph = build_classes(_points(arr), [l.label for l in arr.lines])
    return len(graph.classes), len(graph.simple_only_lines)


def transverse_union(
    s1: GroupStructure, d1: int, s2: GroupStructure, d2: int, intersection_count: int
) -> GroupStructure:
    """Group of the union of two curves meeting in d1*d2 distinct points."""
    if intersection_count != d1 * d2:
        raise NotTransverse(f"{intersection_count} intersection points, expected {d1 * d2}")
    return s1 + s2


def is_big(arr: Arrangement) -> tuple[bool, SingularPoint | None]:
    """True with a witness point of multiplicity >= 3, else (False, None)."""
    for p in intersection_points(arr):
        if p.m >= 3:
            return True, p
    return False, None

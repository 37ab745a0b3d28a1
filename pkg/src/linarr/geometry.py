"""Exact rational geometry of real line arrangements.

Lines are non-vertical, ``y = a*x + b`` with ``Fraction`` coefficients. Singular
points are numbered ``j = 1..q`` by strictly decreasing x, so ``j = 1`` is the
point nearest the base fiber far to the right.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence


class GeometryError(ValueError):
    """Base class for invalid or degenerate arrangement input."""


class ParallelLines(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class NotGeneric(GeometryError):
    """Two distinct singular points share an x-coordinate."""


class InternalInconsistency(RuntimeError):
    pass


def as_fraction(value) -> Fraction:
    """Parse an int, Fraction or string like ``"3/4"`` / ``"-2"`` exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected int or 'p/q' string, got {value!r}")


@dataclass(frozen=True)
class Line:
    label: str
    a: Fraction
    b: Fraction

    def __post_init__(self):
        # Fraction already keeps numerator/denominator reduced with positive denominator
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    def y_at(self, x: Fraction) -> Fraction:
        return self.a * x + self.b

    def __str__(self):
        return f"{self.label}: y = {self.a}*x + {self.b}"


def intersect(l1: Line, l2: Line) -> tuple[Fraction, Fraction]:
    if l1.a == l2.a:
        if l1.b == l2.b:
            raise IdenticalLines(f"lines {l1.label} and {l2.label} coincide")
        raise ParallelLines(f"lines {l1.label} and {l2.label} are parallel (slope {l1.a})")
    x = (l2.b - l1.b) / (l1.a - l2.a)
    return x, l1.y_at(x)


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        labels = [l.label for l in lines]
        if len(set(labels)) != len(labels):
            raise GeometryError(f"duplicate line labels in {labels}")
        for l1, l2 in itertools.combinations(lines, 2):
            intersect(l1, l2)  # raises on parallel / identical pairs

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, label: str) -> Line:
        for l in self.lines:
            if l.label == label:
                return l
        raise KeyError(label)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[tuple], prefix: str = "L") -> Arrangement:
        """Build from ``(a, b)`` pairs, labelling lines ``L1, L2, ...``."""
        return cls(tuple(Line(f"{prefix}{i}", a, b) for i, (a, b) in enumerate(coeffs, 1)))

    def to_json(self) -> dict:
        return {"lines": [{"label": l.label, "a": str(l.a), "b": str(l.b)} for l in self.lines]}

    @classmethod
    def from_json(cls, data: dict) -> Arrangement:
        try:
            entries = data["lines"]
            lines = [Line(str(e["label"]), as_fraction(e["a"]), as_fraction(e["b"])) for e in entries]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ArrangementParseError(f"malformed arrangement document: {exc}") from exc
        return cls(tuple(lines))


class ArrangementParseError(ValueError):
    pass


def load_arrangement(path: str | Path) -> Arrangement:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ArrangementParseError(f"cannot read {path}: {exc}") from exc
    return Arrangement.from_json(data)


@dataclass(frozen=True)
class LefschetzPair:
    k: int
    l: int

    def __iter__(self):
        return iter((self.k, self.l))


@dataclass(frozen=True)
class SingularPoint:
    x: Fraction
    y: Fraction
    incident: frozenset[str]
    j: int
    pair: LefschetzPair | None = None

    @property
    def m(self) -> int:
        return len(self.incident)


def _grouped_points(arr: Arrangement) -> dict[tuple[Fraction, Fraction], set[str]]:
    points: dict[tuple[Fraction, Fraction], set[str]] = {}
    for l1, l2 in itertools.combinations(arr.lines, 2):
        points.setdefault(intersect(l1, l2), set()).update((l1.label, l2.label))
    return points


def intersection_points(arr: Arrangement) -> list[SingularPoint]:
    """All intersection points in decreasing (x, y) order, with no genericity check."""
    grouped = _grouped_points(arr)
    ordered = sorted(grouped, reverse=True)
    return [SingularPoint(x, y, frozenset(grouped[(x, y)]), j) for j, (x, y) in enumerate(ordered, 1)]


def singular_points(arr: Arrangement) -> list[SingularPoint]:
    """All intersection points, sorted by decreasing x and numbered from 1."""
    grouped = _grouped_points(arr)
    ordered = sorted(grouped, key=lambda p: p[0], reverse=True)
    for p, q in zip(ordered, ordered[1:]):
        if p[0] == q[0]:
            raise NotGeneric(f"singular points {p} and {q} share x = {p[0]}")
    return [
        SingularPoint(x=x, y=y, incident=frozenset(grouped[(x, y)]), j=j)
        for j, (x, y) in enumerate(ordered, 1)
    ]


@dataclass(frozen=True)
class ShearRecord:
    """The coordinate change ``(x, y) -> (x + c*y, y)`` applied by ``normalize``."""
    c: Fraction = Fraction(0)

    @property
    def is_identity(self) -> bool:
        return self.c == 0

    def point(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        return x + self.c * y, y


def shear(arr: Arrangement, c: Fraction) -> Arrangement:
    """Image of ``arr`` under ``(x, y) -> (x + c*y, y)``; fails if a line turns vertical."""
    c = Fraction(c)
    lines = []
    for l in arr.lines:
        denom = 1 + l.a * c
        if denom == 0:
            raise GeometryError(f"shear c={c} makes {l.label} vertical")
        lines.append(Line(l.label, l.a / denom, l.b / denom))
    return Arrangement(tuple(lines))


def _shear_candidates():
    yield Fraction(0)
    for d in itertools.count(1):
        yield Fraction(1, d)
        yield Fraction(-1, d)


def _is_generic(arr: Arrangement) -> bool:
    xs = [x for x, _ in _grouped_points(arr)]
    return len(set(xs)) == len(xs)


def normalize(arr: Arrangement) -> tuple[Arrangement, ShearRecord]:
    """Shear the arrangement until every singular point has its own x-coordinate.

    Candidates are tried in the order 0, 1, -1, 1/2, -1/2, ... so the result is
    reproducible. Only finitely many values of c are bad, so the search ends.
    """
    for c in _shear_candidates():
        if any(1 + l.a * c == 0 for l in arr.lines):
            continue
        sheared = shear(arr, c) if c else arr
        if _is_generic(sheared):
            return sheared, ShearRecord(c)
    raise AssertionError("unreachable")


def _epsilon(points: Sequence[SingularPoint]) -> Fraction:
    if len(points) < 2:
        return Fraction(1)
    return min(p.x - q.x for p, q in zip(points, points[1:])) / 2


def line_order(arr: Arrangement, x: Fraction) -> list[str]:
    """Labels sorted by increasing y over the (non-singular) fiber at ``x``."""
    ys = sorted(((l.y_at(x), l.label) for l in arr.lines))
    for (y1, a), (y2, b) in zip(ys, ys[1:]):
        if y1 == y2:
            raise InternalInconsistency(f"fiber x={x} is singular ({a}, {b})")
    return [label for _, label in ys]


def base_fiber_x(arr: Arrangement) -> Fraction:
    """An x-value to the right of every singular point."""
    points = singular_points(arr)
    if not points:
        return Fraction(0)
    return points[0].x + _epsilon(points)


def lefschetz_pairs(arr: Arrangement) -> list[SingularPoint]:
    """Singular points with their Lefschetz pairs read just right of each point."""
    points = singular_points(arr)
    eps = _epsilon(points)
    filled = []
    for p in points:
        order = line_order(arr, p.x + eps)
        ranks = sorted(order.index(label) + 1 for label in p.incident)
        k, l = ranks[0], ranks[-1]
        if l - k + 1 != len(ranks):
            raise InternalInconsistency(f"lines through point {p.j} are not consecutive: {ranks}")
        filled.append(replace(p, pair=LefschetzPair(k, l)))
    return filled


def crossing_count(arr: Arrangement, first: Iterable[str], second: Iterable[str]) -> int:
    """Number of distinct points where a line of ``first`` meets a line of ``second``."""
    first, second = set(first), set(second)
    if first & second:
        raise GeometryError(f"sub-arrangements share lines {sorted(first & second)}")
    pts = {intersect(arr.line(a), arr.line(b)) for a in first for b in second}
    return len(pts)


@dataclass(frozen=True)
class AnalyzedArrangement:
    """A generic arrangement together with its pairs and the normalization used."""
    original: Arrangement
    arrangement: Arrangement
    shear: ShearRecord
    points: tuple[SingularPoint, ...] = field(default=())
    base_order: tuple[str, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.arrangement.n


def analyze(arr: Arrangement, auto_normalize: bool = True) -> AnalyzedArrangement:
    if auto_normalize:
        work, record = normalize(arr)
    else:
        work, record = arr, ShearRecord()
    points = lefschetz_pairs(work)
    base = tuple(line_order(work, base_fiber_x(work)))
    return AnalyzedArrangement(arr, work, record, tuple(points), base)

"""Arrangements of construction lines and registration marks.

An :class:`Arrangement` is the pair ``(lines, points)``. The point set is kept
as given so that malformed input can be reported by :func:`validate`;
:func:`from_lines` is the constructor that closes a line set under
pairwise intersection.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import BadK, DuplicateLine, DuplicatePoint, IdenticalPoints
from .geometry import (
    Line,
    Point,
    Slope,
    intersect,
    line_through,
    line_with_direction,
    slope_of,
)


class FamilyKind(enum.Enum):
    NearPencil = "NearPencil"
    AugmentedNearPencil = "AugmentedNearPencil"
    Railtrack = "Railtrack"


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise IdenticalPoints(f"degenerate segment at {self.p}")

    @property
    def line(self) -> Line:
        return line_through(self.p, self.q)


@dataclass(frozen=True)
class Shape:
    segments: frozenset = frozenset()


@dataclass(frozen=True)
class Arrangement:
    lines: frozenset = frozenset()
    points: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "lines", frozenset(self.lines))
        object.__setattr__(self, "points", frozenset(self.points))

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def k(self) -> int:
        return len(self.points)

    def sorted_lines(self) -> list[Line]:
        return sorted(self.lines)

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def lines_through(self, p: Point) -> list[Line]:
        return [l for l in self.sorted_lines() if l.contains(p)]

    def points_on(self, line: Line) -> list[Point]:
        return [p for p in self.sorted_points() if line.contains(p)]

    def map_points(self, f) -> "Arrangement":
        """Image under an invertible affine map ``f`` acting on points."""
        lines = set()
        for l in self.lines:
            # two points span the line; their images span the image line
            p, q = _two_points_on(l)
            lines.add(line_through(f(p), f(q)))
        return Arrangement(lines, {f(p) for p in self.points})


def _two_points_on(l: Line) -> tuple[Point, Point]:
    if l.b != 0:
        p = Point(0, Fraction(l.c, l.b))
    else:
        p = Point(Fraction(l.c, l.a), 0)
    d = slope_of(l)
    return p, p.translate(d.dx, d.dy)


@dataclass
class Violation:
    rule: int
    witness: Union[Point, tuple]
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.valid:
            return "valid"
        return "\n".join(f"rule ({v.rule}): {v.message}" for v in self.violations)


def _distinct(items, exc, what):
    items = list(items)
    counts = Counter(items)
    dup = [x for x, c in counts.items() if c > 1]
    if dup:
        raise exc(f"duplicate {what}: {dup[0]!r}")
    return items


def validate(lines: Iterable[Line], points: Iterable[Point]) -> ValidationReport:
    """Check rule (1) (every mark on two or more lines) and rule (2) (every
    crossing of two nonparallel lines is a mark)."""
    lines = sorted(_distinct(lines, DuplicateLine, "line"))
    points = sorted(_distinct(points, DuplicatePoint, "point"))
    report = ValidationReport()
    pset = set(points)
    for p in points:
        through = sum(1 for l in lines if l.contains(p))
        if through < 2:
            report.violations.append(
                Violation(1, p, f"point {p} lies on {through} line(s), needs at least 2")
            )
    for l1, l2 in combinations(lines, 2):
        x = intersect(l1, l2)
        if x is not None and x not in pset:
            report.violations.append(
                Violation(2, (l1, l2), f"{l1} and {l2} cross at {x}, which is not a mark")
            )
    return report


def from_lines(lines: Iterable[Line]) -> Arrangement:
    lines = _distinct(lines, DuplicateLine, "line")
    points = set()
    for l1, l2 in combinations(lines, 2):
        x = intersect(l1, l2)
        if x is not None:
            points.add(x)
    return Arrangement(lines, points)


def empty_arrangement() -> Arrangement:
    return Arrangement()


def _param(seg_line: Line, p: Point) -> Fraction:
    # coordinate along the line's direction; monotone for points on the line
    d = slope_of(seg_line)
    return d.dx * p.x + d.dy * p.y


def canonicalize_shape(segments: Iterable[Segment]) -> Shape:
    """Merge collinear segments that overlap or touch into maximal ones."""
    groups: dict[Line, list[tuple[Fraction, Fraction, Point, Point]]] = {}
    for s in segments:
        l = s.line
        tp, tq = _param(l, s.p), _param(l, s.q)
        lo, hi = (s.p, s.q) if tp < tq else (s.q, s.p)
        groups.setdefault(l, []).append((min(tp, tq), max(tp, tq), lo, hi))
    merged = set()
    for l, spans in groups.items():
        spans.sort(key=lambda t: (t[0], t[1]))
        cur = list(spans[0])
        for t0, t1, lo, hi in spans[1:]:
            if t0 <= cur[1]:
                if t1 > cur[1]:
                    cur[1], cur[3] = t1, hi
            else:
                merged.add(Segment(cur[2], cur[3]))
                cur = [t0, t1, lo, hi]
        merged.add(Segment(cur[2], cur[3]))
    return Shape(frozenset(merged))


def from_shape(shape: Shape) -> Arrangement:
    return from_lines({s.line for s in shape.segments})


def generate_family(kind: FamilyKind, k: int) -> Arrangement:
    if k < 3:
        raise BadK(f"families need k >= 3, got {k}")
    base = Line(0, 1, 0)
    if kind is FamilyKind.Railtrack:
        return from_lines([base] + [Line(1, 0, x) for x in range(1, k + 1)])
    apex = Point(0, 1)
    lines = [base] + [line_through(apex, Point(x, 0)) for x in range(1, k)]
    if kind is FamilyKind.AugmentedNearPencil:
        lines.append(Line(0, 1, 1))
    return from_lines(lines)


def pencil_directions(n: int) -> list[Slope]:
    """First n directions of the sequence (1,0), (0,1), (1,1), (1,2), (1,3), ..."""
    dirs = [Slope(1, 0), Slope(0, 1)]
    m = 1
    while len(dirs) < n:
        dirs.append(Slope(1, m))
        m += 1
    return dirs[:n]


def pencil(n: int, center: Optional[Point] = None) -> Arrangement:
    """n >= 2 concurrent lines: the k = 1 family."""
    c = center if center is not None else Point(0, 0)
    return from_lines([line_with_direction(c, d) for d in pencil_directions(n)])


def parallel_family(n: int) -> Arrangement:
    """n horizontal lines y = 0 .. n-1: the k = 0 family (n = 1 is a single line)."""
    return Arrangement({Line(0, 1, y) for y in range(n)}, set())

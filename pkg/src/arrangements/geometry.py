"""Exact planar primitives: points, normalized lines, slopes and predicates.

Coordinates are :class:`fractions.Fraction` throughout; nothing here touches
floating point. A line is stored as an integer triple ``(a, b, c)`` meaning
``a*x + b*y = c``, normalized so that equal lines compare and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Union

from .errors import DuplicatePoints, IdenticalLines, IdenticalPoints, NotCollinear

Rational = Fraction
Number = Union[int, Fraction, str]


def rational(value: Number) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings. Floats are rejected."""
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not accepted")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rational(self.x))
        object.__setattr__(self, "y", rational(self.y))

    def __sub__(self, other: "Point") -> tuple[Fraction, Fraction]:
        return (self.x - other.x, self.y - other.y)

    def translate(self, dx, dy) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self):
        return f"Point({_fmt(self.x)}, {_fmt(self.y)})"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _clear(*values) -> tuple[int, ...]:
    """Scale rationals by the lcm of denominators and reduce by the gcd."""
    fr = [rational(v) for v in values]
    m = 1
    for q in fr:
        m = lcm(m, q.denominator)
    ints = [int(q * m) for q in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


@dataclass(frozen=True, order=True)
class Line:
    """The line ``a*x + b*y = c`` with ``gcd(a, b, c) = 1`` and a leading positive sign."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = _clear(self.a, self.b, self.c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a and b are both zero")
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def __repr__(self):
        return f"Line({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True, order=True)
class Slope:
    """Primitive direction vector; dx > 0, or dx == 0 and dy == 1."""

    dx: int
    dy: int

    def __post_init__(self):
        dx, dy = _clear(self.dx, self.dy)
        if dx == 0 and dy == 0:
            raise ValueError("zero direction")
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise IdenticalPoints(f"{p} == {q}")
    dx, dy = q - p
    # normal (dy, -dx)
    return Line(dy, -dx, dy * p.x - dx * p.y)


def line_with_direction(p: Point, direction: Slope) -> Line:
    return Line(direction.dy, -direction.dx, direction.dy * p.x - direction.dx * p.y)


def slope_of(line: Line) -> Slope:
    return Slope(-line.b, line.a)


def parallel(l1: Line, l2: Line) -> bool:
    return l1.a * l2.b - l1.b * l2.a == 0


def intersect(l1: Line, l2: Line) -> Optional[Point]:
    """Unique common point of two distinct lines, or None when parallel."""
    if l1 == l2:
        raise IdenticalLines(repr(l1))
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        return None
    x = Fraction(l1.c * l2.b - l1.b * l2.c, det)
    y = Fraction(l1.a * l2.c - l1.c * l2.a, det)
    return Point(x, y)


def cross(p: Point, q: Point, r: Point) -> Fraction:
    (ux, uy), (vx, vy) = q - p, r - p
    return ux * vy - uy * vx


def orientation(p: Point, q: Point, r: Point) -> int:
    c = cross(p, q, r)
    return (c > 0) - (c < 0)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return cross(p, q, r) == 0


def between(a: Point, b: Point, c: Point) -> bool:
    """True iff ``b`` lies strictly inside the segment ``a``-``c``."""
    if a == b or b == c or a == c:
        raise DuplicatePoints(f"{a}, {b}, {c}")
    if orientation(a, b, c) != 0:
        raise NotCollinear(f"{a}, {b}, {c}")
    (ux, uy), (vx, vy) = b - a, c - a
    t = ux / vx if vx != 0 else uy / vy
    return 0 < t < 1


def direction(p: Point, q: Point) -> tuple[int, int]:
    """Primitive integer vector pointing from p to q (sign kept)."""
    dx, dy = q - p
    ix, iy = _clear(dx, dy)
    return ix, iy

"""Line-oriented text format for arrangements and shapes.

Records, one per line::

    # comment
    line a b c          a*x + b*y = c
    point x y           optional; when absent the marks are computed
    segment x1 y1 x2 y2 shape files

Numbers are integers or ``p/q``; decimals are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .arrangement import Arrangement, Segment, Shape, canonicalize_shape, from_lines, from_shape
from .errors import ArrangementError, ParseError
from .geometry import Line, Point

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")
_ARITY = {"line": 3, "point": 2, "segment": 4}


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _number(tok: str, lineno: int) -> Fraction:
    if not _NUMBER.match(tok):
        raise ParseError(f"not an integer or p/q rational: {tok!r}", lineno)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", lineno) from None


@dataclass
class ParsedFile:
    lines: list = field(default_factory=list)
    points: list = field(default_factory=list)
    segments: list = field(default_factory=list)
    has_points: bool = False

    def arrangement(self) -> Arrangement:
        if self.segments and not self.lines:
            return from_shape(canonicalize_shape(self.segments))
        if len(set(self.lines)) != len(self.lines):
            raise ParseError("duplicate line record")
        if self.has_points:
            if len(set(self.points)) != len(self.points):
                raise ParseError("duplicate point record")
            return Arrangement(self.lines, self.points)
        return from_lines(self.lines)

    def shape(self) -> Shape:
        return canonicalize_shape(self.segments)


def parse(text: str) -> ParsedFile:
    out = ParsedFile()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        kind, *toks = body.split()
        if kind not in _ARITY:
            raise ParseError(f"unknown record type {kind!r}", lineno)
        if len(toks) != _ARITY[kind]:
            raise ParseError(f"{kind} takes {_ARITY[kind]} numbers, got {len(toks)}", lineno)
        nums = [_number(t, lineno) for t in toks]
        try:
            if kind == "line":
                out.lines.append(Line(*nums))
            elif kind == "point":
                out.points.append(Point(*nums))
                out.has_points = True
            else:
                out.segments.append(Segment(Point(nums[0], nums[1]), Point(nums[2], nums[3])))
        except (ValueError, ArrangementError) as exc:
            raise ParseError(str(exc), lineno) from None
    return out


def serialize(A: Arrangement, comments: Optional[list] = None) -> str:
    rows = [f"# {c}" for c in (comments or [])]
    for l in A.sorted_lines():
        rows.append(f"line {l.a} {l.b} {l.c}")
    for p in A.sorted_points():
        rows.append(f"point {format_rational(p.x)} {format_rational(p.y)}")
    return "\n".join(rows) + "\n"


def serialize_shape(shape: Shape) -> str:
    rows = []
    for s in sorted(shape.segments, key=lambda s: (s.p, s.q)):
        coords = (s.p.x, s.p.y, s.q.x, s.q.y)
        rows.append("segment " + " ".join(format_rational(v) for v in coords))
    return "\n".join(rows) + "\n"


def read(path) -> ParsedFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def load_arrangement(path) -> Arrangement:
    return read(path).arrangement()


def write_arrangement(path, A: Arrangement, comments=None) -> None:
    Path(path).write_text(serialize(A, comments), encoding="utf-8")

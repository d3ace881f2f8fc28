from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from arrangements import Line, Point, Slope, between, intersect, line_through, orientation, slope_of
from arrangements.errors import DuplicatePoints, IdenticalLines, IdenticalPoints, NotCollinear

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
points = st.builds(Point, small, small)


def test_line_through_examples():
    assert line_through(Point(0, 0), Point(1, 0)) == Line(0, 1, 0)
    assert line_through(Point(0, 1), Point(1, 0)) == Line(1, 1, 1)
    l = line_through(Point(F(1, 2), 0), Point(0, F(1, 3)))
    assert (l.a, l.b, l.c) == (2, 3, 1)


def test_line_through_identical_points():
    with pytest.raises(IdenticalPoints):
        line_through(Point(1, 1), Point(1, 1))


def test_line_normalization():
    assert Line(-2, -4, 6) == Line(1, 2, -3)
    assert Line(0, -3, 3) == Line(0, 1, -1)
    assert Line(F(1, 2), F(1, 3), 1) == Line(3, 2, 6)
    with pytest.raises(ValueError):
        Line(0, 0, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Point(0.5, 1)


def test_intersect_examples():
    assert intersect(Line(0, 1, 0), Line(1, 0, 0)) == Point(0, 0)
    assert intersect(Line(0, 1, 0), Line(0, 1, 1)) is None
    assert intersect(Line(2, 3, 1), Line(1, -1, 0)) == Point(F(1, 5), F(1, 5))
    with pytest.raises(IdenticalLines):
        intersect(Line(1, 1, 1), Line(2, 2, 2))


def test_slope_examples():
    assert slope_of(Line(0, 1, 0)) == Slope(1, 0)
    assert slope_of(Line(1, 0, 0)) == Slope(0, 1)
    assert slope_of(Line(2, 3, 1)) == Slope(3, -2)
    assert Slope(-2, -4) == Slope(1, 2)
    assert Slope(0, -5) == Slope(0, 1)


def test_orientation_examples():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orientation(Point(0, 0), Point(1, 0), Point(2, 0)) == 0
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == -1


def test_between_examples():
    assert between(Point(0, 0), Point(1, 0), Point(2, 0))
    assert not between(Point(1, 0), Point(0, 0), Point(2, 0))
    assert between(Point(0, 0), Point(F(1, 3), F(1, 3)), Point(1, 1))
    with pytest.raises(NotCollinear):
        between(Point(0, 0), Point(1, 1), Point(2, 0))
    with pytest.raises(DuplicatePoints):
        between(Point(0, 0), Point(0, 0), Point(2, 0))


@given(points, points)
def test_line_through_contains_both(p, q):
    assume(p != q)
    l = line_through(p, q)
    assert l.contains(p) and l.contains(q)
    assert line_through(q, p) == l
    assert Line(l.a, l.b, l.c) == l


@given(points, points, points, points)
def test_intersection_symmetric_and_incident(p, q, r, s):
    assume(p != q and r != s)
    l1, l2 = line_through(p, q), line_through(r, s)
    assume(l1 != l2)
    x = intersect(l1, l2)
    assert x == intersect(l2, l1)
    if x is None:
        assert slope_of(l1) == slope_of(l2)
    else:
        assert l1.contains(x) and l2.contains(x)


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == orientation(q, r, p)


@given(points, points, st.fractions(min_value=-3, max_value=4, max_denominator=5))
def test_between_matches_parameter(a, c, t):
    assume(a != c)
    b = Point(a.x + t * (c.x - a.x), a.y + t * (c.y - a.y))
    assume(b != a and b != c)
    assert between(a, b, c) == (0 < t < 1)

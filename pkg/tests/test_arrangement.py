import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangements import (
    FamilyKind,
    Line,
    Point,
    Segment,
    canonicalize_shape,
    from_lines,
    from_shape,
    generate_family,
    parallel_family,
    pencil,
    validate,
)
from arrangements.arrangement import Shape
from arrangements.errors import BadK, DuplicateLine, IdenticalPoints
from arrangements.invariants import summary_triple

Y0, X0 = Line(0, 1, 0), Line(1, 0, 0)

lines_strategy = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4))
    .filter(lambda t: t[0] or t[1])
    .map(lambda t: Line(*t)),
    max_size=6,
    unique=True,
)


def test_validate_rule1_witness():
    rep = validate([Y0, X0], [Point(0, 0), Point(1, 0)])
    assert not rep.valid
    assert [(v.rule, v.witness) for v in rep.violations] == [(1, Point(1, 0))]


def test_validate_rule2_witness():
    rep = validate([Y0, X0], [])
    assert not rep.valid
    (v,) = rep.violations
    assert v.rule == 2 and set(v.witness) == {Y0, X0}


def test_validate_parallels_and_empty():
    assert validate([Y0, Line(0, 1, 1)], []).valid
    assert validate([], []).valid


def test_validate_rejects_duplicates():
    with pytest.raises(DuplicateLine):
        validate([Y0, Line(0, 2, 0)], [])


def test_from_lines_examples():
    assert from_lines([Y0, Line(0, 1, 1), X0]).points == {Point(0, 0), Point(0, 1)}
    assert from_lines([X0, Y0, Line(1, 1, 1)]).points == {Point(0, 0), Point(1, 0), Point(0, 1)}
    assert from_lines([Y0]).points == frozenset()


@given(lines_strategy)
def test_from_lines_is_valid_fixpoint(lines):
    A = from_lines(lines)
    assert validate(A.lines, A.points).valid
    assert from_lines(A.lines) == A


def test_canonicalize_shape_examples():
    s = canonicalize_shape([Segment(Point(0, 0), Point(1, 0)), Segment(Point(1, 0), Point(2, 0))])
    assert s.segments == {Segment(Point(0, 0), Point(2, 0))}
    s = canonicalize_shape([Segment(Point(0, 0), Point(2, 0)), Segment(Point(1, 0), Point(3, 0))])
    assert s.segments == {Segment(Point(0, 0), Point(3, 0))}
    segs = [Segment(Point(0, 0), Point(1, 0)), Segment(Point(0, 1), Point(1, 1))]
    assert canonicalize_shape(segs).segments == set(segs)


def test_degenerate_segment_rejected():
    with pytest.raises(IdenticalPoints):
        Segment(Point(1, 1), Point(1, 1))


def test_from_shape_examples():
    corners = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    square = canonicalize_shape(Segment(corners[i], corners[(i + 1) % 4]) for i in range(4))
    A = from_shape(square)
    assert A.lines == {Line(1, 0, 0), Line(1, 0, 1), Y0, Line(0, 1, 1)}
    assert A.points == set(corners)
    assert summary_triple(A).astuple() == (4, 4, 2)
    gap = canonicalize_shape([Segment(Point(0, 0), Point(1, 0)), Segment(Point(2, 0), Point(3, 0))])
    assert len(gap.segments) == 2
    B = from_shape(gap)
    assert B.lines == {Y0} and not B.points
    assert from_shape(Shape(frozenset())).n == 0


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(1, 4)), min_size=1, max_size=5), st.randoms())
def test_splitting_segments_keeps_arrangement(spans, rnd):
    # cutting a segment into touching pieces changes neither the shape nor the arrangement
    whole = [Segment(Point(a, a), Point(a + w, a + w)) for a, w in spans] + [
        Segment(Point(a, 0), Point(a, w)) for a, w in spans
    ]
    pieces = []
    for s in whole:
        mid = Point((s.p.x + s.q.x) / 2, (s.p.y + s.q.y) / 2)
        pieces += [Segment(s.p, mid), Segment(mid, s.q)]
    rnd.shuffle(pieces)
    assert canonicalize_shape(pieces) == canonicalize_shape(whole)
    assert from_shape(canonicalize_shape(pieces)) == from_shape(canonicalize_shape(whole))


@pytest.mark.parametrize("k", range(3, 13))
def test_family_sizes(k):
    np_, anp, rt = (generate_family(kind, k) for kind in FamilyKind)
    for A in (np_, anp, rt):
        assert A.k == k
        assert validate(A.lines, A.points).valid
    assert (np_.n, summary_triple(np_).s) == (k, k)
    assert anp.n == k + 1
    assert (rt.n, summary_triple(rt).s) == (k + 1, 2)


def test_family_examples():
    assert summary_triple(generate_family(FamilyKind.NearPencil, 4)).astuple() == (4, 4, 4)
    assert summary_triple(generate_family(FamilyKind.Railtrack, 4)).astuple() == (5, 4, 2)
    assert summary_triple(generate_family(FamilyKind.AugmentedNearPencil, 3)).astuple() == (4, 3, 3)
    with pytest.raises(BadK):
        generate_family(FamilyKind.NearPencil, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_degenerate_families(n):
    P = parallel_family(n)
    assert P.k == 0 and validate(P.lines, P.points).valid
    if n >= 2:
        Q = pencil(n)
        assert summary_triple(Q).astuple() == (n, 1, n)
        assert validate(Q.lines, Q.points).valid

import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrangements import FamilyKind, Line, from_lines, generate_family, pencil
from arrangements.cli import main
from arrangements.errors import ParseError
from arrangements.fileformat import parse, serialize, serialize_shape
from arrangements.render import render_svg, viewport

from conftest import square_with_diagonals


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "a.txt", "line 0 1 0\nline 0 1 1\nline 1 0 0\n")
    code, out, _ = run(capsys, "validate", good)
    assert code == 0 and "valid" in out
    bad = write(tmp_path, "b.txt", "line 0 1 0\nline 1 0 0\npoint 1 0\n")
    code, out, _ = run(capsys, "validate", bad)
    assert code == 2 and "rule (1)" in out
    broken = write(tmp_path, "c.txt", "line 0 1\n")
    code, _, err = run(capsys, "validate", broken)
    assert code == 3 and "line 1" in err
    code, _, _ = run(capsys, "validate", str(tmp_path / "missing.txt"))
    assert code == 3


@pytest.mark.parametrize(
    "text",
    ["line 0 1 0.5\n", "line 0 1 1/0\n", "point 1 2\npoint 1 2\nline 0 1 2\nline 1 0 1\n", "circle 1 2 3\n", "line 0 0 1\n"],
)
def test_parse_errors(tmp_path, capsys, text):
    code, _, _ = run(capsys, "validate", write(tmp_path, "e.txt", text))
    assert code == 3


def test_analyze_reports(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, "t.txt", "line 1 0 0\nline 0 1 0\nline 1 1 1\n"))
    assert code == 0
    assert "(3 3 3)" in out and "NearPencil" in out and "linear space: yes" in out and "n ≥ k: 3 ≥ 3 ✓" in out
    sq = write(tmp_path, "sq.txt", serialize(square_with_diagonals()))
    code, out, _ = run(capsys, "analyze", sq)
    assert "(6 5 4)" in out and "linear space: yes" in out
    assert "centrex (0,0), central degree 2, signature (1, 1)" in out
    code, out, _ = run(capsys, "analyze", write(tmp_path, "par.txt", "line 0 1 0\nline 0 1 1\n"))
    assert code == 0 and "(2 0 1)" in out and "k=0 family" in out
    code, out, _ = run(capsys, "analyze", write(tmp_path, "bad.txt", "line 0 1 0\nline 1 0 0\npoint 1 0\n"))
    assert code == 2


def test_compare_modes(tmp_path, capsys):
    t1 = write(tmp_path, "t1.txt", "line 1 0 0\nline 0 1 0\nline 1 1 1\n")
    t2 = write(tmp_path, "t2.txt", "line 1 0 0\nline 0 1 0\nline 1 1 3\n")
    code, out, _ = run(capsys, "compare", t1, t2, "--mode", "affine")
    assert code == 0 and "verdict: equivalent" in out and "matrix" in out
    code, out, _ = run(capsys, "compare", t1, t2, "--mode", "projective")
    assert code == 2 and "unsupported" in out
    rt = write(tmp_path, "rt.txt", serialize(generate_family(FamilyKind.Railtrack, 4)))
    anp = write(tmp_path, "anp.txt", serialize(generate_family(FamilyKind.AugmentedNearPencil, 4)))
    code, out, _ = run(capsys, "compare", rt, anp)
    assert "verdict: distinct" in out and "first distinguishing measure: (1)" in out


def test_compare_isomorphic_with_different_signatures(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "line 1 2 3\nline 1 2 6\nline 2 1 6\nline 3 2 6\n")
    b = write(tmp_path, "b.txt", "line 1 2 2\nline 1 2 7\nline 3 -2 3\nline 3 1 6\n")
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0 and "verdict: equivalent" in out
    assert "note: measure (4) separates them" in out


def test_enumerate_and_conjecture(tmp_path, capsys):
    out_dir = tmp_path / "cat"
    code, out, _ = run(capsys, "enumerate", "--points", "3", "--out", str(out_dir), "--svg")
    assert code == 0 and "3 entries" in out
    assert len(list(out_dir.glob("entry_*.report.txt"))) == 3
    assert len(list(out_dir.glob("entry_*.svg"))) == 3
    summary = (out_dir / "catalog_summary.txt").read_text()
    assert "entries: 3" in summary and "undecided: 0" in summary
    code, out, _ = run(capsys, "conjecture", "--points", "4")
    assert code == 0 and re.search(r"realized: 0", out)


def test_shape_command(tmp_path, capsys):
    sq = write(
        tmp_path,
        "sq.txt",
        "segment 0 0 1 0\nsegment 1 0 1 1\nsegment 1 1 0 1\nsegment 0 1 0 0\n",
    )
    code, out, _ = run(capsys, "shape", sq)
    assert code == 0
    assert out.count("line ") == 4 and out.count("point ") == 4


def test_family_and_render(tmp_path, capsys):
    code, out, _ = run(capsys, "family", "Railtrack", "4")
    assert code == 0 and out.count("line ") == 5
    path = write(tmp_path, "rt.txt", out)
    code, svg1, _ = run(capsys, "render", path)
    code2, svg2, _ = run(capsys, "render", path)
    assert code == code2 == 0 and svg1 == svg2
    assert svg1.count("<circle") == 4 and svg1.count("<line ") == 5
    assert "(5 4 2)" in svg1


def test_render_marks_centrex():
    svg = render_svg(square_with_diagonals())
    assert svg.count("#1f5fd6") == 1
    assert "(6 5 4)" in svg


def test_viewport_without_marks():
    box = viewport(from_lines([Line(0, 1, 0), Line(0, 1, 5)]))
    assert box[1] < 0 and box[3] > 5
    svg = render_svg(from_lines([Line(0, 1, 0), Line(0, 1, 5)]))
    assert svg.count("<line ") == 2
    assert render_svg(pencil(3)).count("<line ") == 3


arrangements_strategy = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4))
    .filter(lambda t: t[0] or t[1])
    .map(lambda t: Line(*t)),
    max_size=6,
    unique=True,
).map(from_lines)


@given(arrangements_strategy)
def test_serialize_roundtrip(A):
    assert parse(serialize(A)).arrangement() == A
    assert parse(serialize(A, ["a comment"])).arrangement() == A


def test_shape_roundtrip():
    parsed = parse("segment 0 0 1 0\nsegment 1 0 2 0\nsegment 0 0 0 1/2\n")
    text = serialize_shape(parsed.shape())
    assert text == "segment 0 0 0 1/2\nsegment 0 0 2 0\n"
    assert parse(text).shape() == parsed.shape()


def test_parse_reports_line_number():
    with pytest.raises(ParseError) as exc:
        parse("# ok\nline 0 1 0\npoint x 1\n")
    assert "line 3" in str(exc.value)

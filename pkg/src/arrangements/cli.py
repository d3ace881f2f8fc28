"""Command-line front end.

Exit codes: 0 success or valid, 2 domain-invalid input, 3 parse error,
4 enumeration finished with undecided candidates.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileformat
from .arrangement import FamilyKind, from_shape, generate_family, validate
from .enumeration import Catalog, enumerate_arrangements, verify_conjecture
from .errors import ArrangementError, ParseError, TooFewPoints
from .render import render_svg
from .reports import analysis_report, compare_report, fmt_vec

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_UNDECIDED = 0, 2, 3, 4


def _load(path):
    return fileformat.load_arrangement(path)


def cmd_validate(args) -> int:
    A = _load(args.path)
    report = validate(A.lines, A.points)
    print(f"lines: {A.n}, points: {A.k}")
    if report.valid:
        print("valid")
        return EXIT_OK
    print("invalid")
    print(report)
    return EXIT_INVALID


def _load_valid(path):
    A = _load(path)
    report = validate(A.lines, A.points)
    if not report.valid:
        print(f"{path}: invalid arrangement")
        print(report)
        return None
    return A


def cmd_analyze(args) -> int:
    A = _load_valid(args.path)
    if A is None:
        return EXIT_INVALID
    sys.stdout.write(analysis_report(A))
    return EXIT_OK


def cmd_compare(args) -> int:
    A1, A2 = _load_valid(args.a), _load_valid(args.b)
    if A1 is None or A2 is None:
        return EXIT_INVALID
    try:
        _, text = compare_report(A1, A2, args.mode)
    except TooFewPoints as exc:
        print(f"unsupported: {exc}")
        return EXIT_INVALID
    sys.stdout.write(text)
    return EXIT_OK


def write_catalog(cat: Catalog, out_dir: Path, svg: bool) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = [f"# k = {cat.k}, lines up to n = {cat.n_max}", "# entry code (n k s) family linear-space signature"]
    width = max(3, len(str(len(cat.entries))))
    for idx, e in enumerate(cat.entries, start=1):
        name = f"entry_{idx:0{width}d}"
        t = e.triple
        fam = e.family.value if e.family else "-"
        sig = fmt_vec(e.signature) if e.signature else "-"
        comments = [f"code {e.code.decode()}", f"({t.n} {t.k} {t.s})", f"family {fam}"]
        fileformat.write_arrangement(out_dir / f"{name}.txt", e.arrangement, comments)
        (out_dir / f"{name}.report.txt").write_text(analysis_report(e.arrangement), encoding="utf-8")
        if svg:
            (out_dir / f"{name}.svg").write_text(render_svg(e.arrangement), encoding="utf-8")
        rows.append(
            f"{name} {e.code.decode()} ({t.n} {t.k} {t.s}) {fam} {'yes' if e.linear_space else 'no'} {sig}"
        )
    rows.append("# per line count: abstract realized refuted undecided")
    for n, c in sorted(cat.cells.items()):
        rows.append(f"# n={n}: {c.abstract} {c.realized} {c.refuted} {c.undecided}")
    rows.append(f"entries: {len(cat.entries)}")
    rows.append(f"undecided: {len(cat.undecided)}")
    (out_dir / "catalog_summary.txt").write_text("\n".join(rows) + "\n", encoding="utf-8")


def cmd_enumerate(args) -> int:
    cat = enumerate_arrangements(args.points, args.max_lines)
    for e in cat.entries:
        t = e.triple
        fam = e.family.value if e.family else "-"
        print(f"({t.n} {t.k} {t.s}) {fam} {e.code.decode()}")
    print(f"{len(cat.entries)} entries, {len(cat.refuted)} refuted, {len(cat.undecided)} undecided")
    if args.out:
        write_catalog(cat, Path(args.out), args.svg)
        print(f"written to {args.out}")
    return EXIT_UNDECIDED if cat.undecided else EXIT_OK


def cmd_conjecture(args) -> int:
    rep = verify_conjecture(args.points, args.max_lines)
    print(rep)
    return EXIT_UNDECIDED if rep.undecided_above_bound else EXIT_OK


def cmd_shape(args) -> int:
    parsed = fileformat.read(args.path)
    A = from_shape(parsed.shape())
    text = fileformat.serialize(A)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_render(args) -> int:
    A = _load(args.path)
    svg = render_svg(A, args.width, args.height)
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_family(args) -> int:
    A = generate_family(FamilyKind(args.kind), args.points)
    sys.stdout.write(fileformat.serialize(A))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arrangements", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the two arrangement rules")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="print every comparison measure")
    s.add_argument("path")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("compare", help="compare two arrangements")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--mode", choices=["incidence", "affine", "projective"], default="incidence")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("enumerate", help="enumerate arrangements with k marks")
    s.add_argument("--points", "-k", type=int, required=True)
    s.add_argument("--max-lines", "-n", type=int, default=None)
    s.add_argument("--out", "-o", default=None)
    s.add_argument("--svg", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("conjecture", help="probe the k+1 line bound")
    s.add_argument("--points", "-k", type=int, required=True)
    s.add_argument("--max-lines", "-n", type=int, default=None)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("shape", help="arrangement of a segment file")
    s.add_argument("path")
    s.add_argument("--output", "-o", default=None)
    s.set_defaults(func=cmd_shape)

    s = sub.add_parser("render", help="draw an arrangement as SVG")
    s.add_argument("path")
    s.add_argument("--output", "-o", default=None)
    s.add_argument("--width", type=int, default=400)
    s.add_argument("--height", type=int, default=400)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("family", help="write a named family arrangement")
    s.add_argument("kind", choices=[k.value for k in FamilyKind])
    s.add_argument("points", type=int)
    s.set_defaults(func=cmd_family)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ArrangementError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

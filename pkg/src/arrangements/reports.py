"""Human-readable reports shared by the CLI and the catalog writer."""

from __future__ import annotations

from .arrangement import Arrangement
from .fileformat import format_rational
from .geometry import Point
from .invariants import (
    central_signatures,
    classify,
    debruijn_erdos_check,
    first_distinguishing_measure,
    is_isomorphic,
    is_linear_space,
    point_line_degree_type,
    projective_equivalent,
    summary_triple,
    type_vectors,
)


def fmt_point(p: Point) -> str:
    return f"({format_rational(p.x)},{format_rational(p.y)})"


def fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def family_label(A: Arrangement) -> str:
    if A.k == 0:
        if A.n == 0:
            return "empty arrangement"
        return "k=0 family (single line)" if A.n == 1 else "k=0 family (parallel lines)"
    if A.k == 1:
        return "k=1 family (pencil)"
    if A.k == 2:
        return "k=2 arrangement"
    kind = classify(A)
    return kind.value if kind else "none"


def analysis_report(A: Arrangement) -> str:
    t = summary_triple(A)
    v = type_vectors(A)
    out = [f"summary triple (n k s): ({t.n} {t.k} {t.s})"]
    out.append(f"line type t_1..: {fmt_vec(v.line_type())}")
    out.append(f"slope type s_1..: {fmt_vec(v.slope_type())}")
    out.append(f"point type p_2..: {fmt_vec(v.p)}")
    if v.t and v.t[0]:
        out.append(f"  note: t_0 = {v.t[0]} line(s) carry no mark")
    if A.points:
        out.append("point-line degree types ([p]; [p]_1..[p]_k):")
        for p in A.sorted_points():
            d = point_line_degree_type(A, p)
            out.append(f"  {fmt_point(p)}: degree {d.degree}, {fmt_vec(d.vector)}")
    out.append(f"family: {family_label(A)}")
    out.append(f"linear space: {'yes' if is_linear_space(A) else 'no'}")
    if A.k >= 3:
        out.append(f"de Bruijn-Erdos: {debruijn_erdos_check(A)}")
    sigs = central_signatures(A)
    if not sigs:
        out.append("centrex: none")
    for s in sigs:
        out.append(
            f"centrex {fmt_point(s.centrex)}, central degree {s.degree}, signature {fmt_vec(s.signature)}"
        )
    return "\n".join(out) + "\n"


def compare_report(A1: Arrangement, A2: Arrangement, mode: str) -> tuple[bool, str]:
    """Verdict and text. Raises UnsupportedDegenerate for too few points."""
    out = [f"mode: {mode}"]
    if mode == "incidence":
        w = is_isomorphic(A1, A2)
        equivalent = w is not None
    else:
        T = projective_equivalent(A1, A2, mode)
        equivalent = T is not None
    out.append(f"verdict: {'equivalent' if equivalent else 'distinct'}")
    measure = first_distinguishing_measure(A1, A2)
    if equivalent:
        if mode == "incidence":
            out.append("point labeling:")
            for p in sorted(w.point_map):
                out.append(f"  {fmt_point(p)} -> {fmt_point(w.point_map[p])}")
            out.append("line labeling:")
            for l in sorted(w.line_map):
                m = w.line_map[l]
                out.append(f"  {l.a} {l.b} {l.c} -> {m.a} {m.b} {m.c}")
            if measure is not None and measure[0] == 4:
                out.append(f"note: measure (4) separates them: {measure[1]}")
        else:
            out.append("matrix (acting on (x, y, 1)):")
            out.append(str(T))
    elif measure is not None:
        out.append(f"first distinguishing measure: ({measure[0]}) {measure[1]}")
    else:
        out.append(f"not separated by measures (1)-(4); no {mode} map exists")
    return equivalent, "\n".join(out) + "\n"

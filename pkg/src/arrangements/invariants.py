"""Comparison measures for arrangements.

Covers the summary triple ``(n k s)``, line/slope/point type vectors,
point-line degree types, incidence isomorphism via canonical codes, the
centrex and central signature, linear-space detection with the
de Bruijn-Erdos bound, family classification, and affine/projective
equivalence witnesses.

Incidence structures built here label points and lines in sorted order of
their exact coordinates, so label ``i`` always means ``A.sorted_points()[i]``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

import sympy

from .arrangement import Arrangement, FamilyKind
from .canonical import IncidenceStructure, canonical_labeling, isomorphism, iter_isomorphisms
from .errors import NotACentrex, TooFewPoints, UnknownPoint, UnsupportedDegenerate
from .geometry import Line, Point, Slope, slope_of


@dataclass(frozen=True)
class SummaryTriple:
    n: int
    k: int
    s: int

    def __str__(self):
        return f"({self.n} {self.k} {self.s})"

    def astuple(self):
        return (self.n, self.k, self.s)


def pad(vec: Sequence[int], length: int) -> tuple:
    if len(vec) > length:
        raise ValueError(f"vector of length {len(vec)} does not fit in {length}")
    return tuple(vec) + (0,) * (length - len(vec))


def _trim(vec: list) -> tuple:
    while vec and vec[-1] == 0:
        vec.pop()
    return tuple(vec)


@dataclass(frozen=True)
class TypeVectors:
    """t and s_vec are indexed from 0; p is indexed from 2."""

    t: tuple
    s_vec: tuple
    p: tuple

    def line_type(self) -> tuple:
        return self.t[1:]

    def slope_type(self) -> tuple:
        return self.s_vec[1:]

    def point_type(self) -> tuple:
        return self.p

    def padded(self, length: int) -> tuple[tuple, tuple, tuple]:
        """Line, slope and point types from index 1 (p from 2), zero-padded."""
        return (pad(self.line_type(), length), pad(self.slope_type(), length), pad(self.p, length))


@dataclass(frozen=True)
class DegreeType:
    point: Point
    degree: int
    vector: tuple  # ([p]_1, ..., [p]_k)


def incidence_structure(A: Arrangement) -> IncidenceStructure:
    points, lines = A.sorted_points(), A.sorted_lines()
    inc = frozenset(
        (i, j) for i, p in enumerate(points) for j, l in enumerate(lines) if l.contains(p)
    )
    return IncidenceStructure(len(points), len(lines), inc)


def canonical_code(A: Arrangement) -> bytes:
    return canonical_labeling(incidence_structure(A)).code


@dataclass
class IsomorphismWitness:
    point_map: dict
    line_map: dict


def is_isomorphic(A1: Arrangement, A2: Arrangement) -> Optional[IsomorphismWitness]:
    found = isomorphism(incidence_structure(A1), incidence_structure(A2))
    if found is None:
        return None
    pm, lm = found
    P1, P2 = A1.sorted_points(), A2.sorted_points()
    L1, L2 = A1.sorted_lines(), A2.sorted_lines()
    return IsomorphismWitness(
        {P1[i]: P2[j] for i, j in pm.items()}, {L1[i]: L2[j] for i, j in lm.items()}
    )


def summary_triple(A: Arrangement) -> SummaryTriple:
    return SummaryTriple(A.n, A.k, len({slope_of(l) for l in A.lines}))


def _vectors(line_sizes, line_class, point_degrees) -> TypeVectors:
    t = [0] * (max(line_sizes, default=-1) + 1)
    for u in line_sizes:
        t[u] += 1
    s_sets: dict[int, set] = {}
    for u, c in zip(line_sizes, line_class):
        s_sets.setdefault(u, set()).add(c)
    s_vec = [0] * len(t)
    for u, cs in s_sets.items():
        s_vec[u] = len(cs)
    p = [0] * max(0, max(point_degrees, default=1) - 1)
    for j in point_degrees:
        p[j - 2] += 1
    return TypeVectors(_trim(t), _trim(s_vec), _trim(p))


def type_vectors(A: Arrangement) -> TypeVectors:
    lines, points = A.sorted_lines(), A.sorted_points()
    sizes = [sum(1 for p in points if l.contains(p)) for l in lines]
    degrees = [sum(1 for l in lines if l.contains(p)) for p in points]
    return _vectors(sizes, [slope_of(l) for l in lines], degrees)


def vectors_from_incidence(s: IncidenceStructure) -> tuple[SummaryTriple, TypeVectors]:
    """Triple and type vectors recovered from incidences alone.

    Relies on parallel lines being exactly the pairs that share no mark,
    which holds for every valid arrangement.
    """
    lp = s.line_points()
    classes = s.parallel_classes()
    cls = {j: ci for ci, c in enumerate(classes) for j in c}
    sizes = [len(x) for x in lp]
    degrees = [len(x) for x in s.point_lines()]
    triple = SummaryTriple(s.n, s.k, len(classes))
    return triple, _vectors(sizes, [cls[j] for j in range(s.n)], degrees)


def point_line_degree_type(A: Arrangement, p: Point) -> DegreeType:
    if p not in A.points:
        raise UnknownPoint(repr(p))
    vec = [0] * A.k
    through = A.lines_through(p)
    for l in through:
        u = len(A.points_on(l))
        vec[u - 1] += 1
    return DegreeType(p, len(through), tuple(vec))


# -- centrex and central signature ------------------------------------------


def _split_counts(A: Arrangement, z: Point, l: Line) -> tuple[int, int, Slope]:
    d = slope_of(l)
    pos = neg = 0
    for q in A.points_on(l):
        if q == z:
            continue
        t = (q.x - z.x) * d.dx + (q.y - z.y) * d.dy
        if t > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, d


def _is_centrex(A: Arrangement, z: Point) -> bool:
    through = A.lines_through(z)
    if not through:
        return False
    for l in through:
        pos, neg, _ = _split_counts(A, z, l)
        if pos != neg or pos == 0:
            return False
    return True


def find_centrexes(A: Arrangement) -> list[Point]:
    return [z for z in A.sorted_points() if _is_centrex(A, z)]


def _half(v):
    dx, dy = v
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def _ccw_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def canonical_signature(sig: Sequence[int]) -> tuple:
    """Least rotation or reflection of a cyclic signature."""
    sig = tuple(sig)
    if not sig:
        return sig
    forms = []
    for seq in (sig, sig[::-1]):
        for r in range(len(seq)):
            forms.append(seq[r:] + seq[:r])
    return min(forms)


@dataclass(frozen=True)
class CentralSignature:
    centrex: Point
    degree: int
    signature: tuple
    spokes: tuple  # ((dx, dy), marks) counter-clockwise, 2*degree entries

    def canonical(self) -> tuple:
        return canonical_signature(self.signature)


def central_signature(A: Arrangement, z: Point) -> CentralSignature:
    if z not in A.points or not _is_centrex(A, z):
        raise NotACentrex(repr(z))
    spokes = []
    for l in A.lines_through(z):
        pos, neg, d = _split_counts(A, z, l)
        spokes.append(((d.dx, d.dy), pos))
        spokes.append(((-d.dx, -d.dy), neg))
    spokes.sort(key=functools.cmp_to_key(lambda a, b: _ccw_cmp(a[0], b[0])))
    start = min(range(len(spokes)), key=lambda i: spokes[i][0])
    spokes = spokes[start:] + spokes[:start]
    d = len(spokes) // 2
    return CentralSignature(z, d, tuple(c for _, c in spokes[:d]), tuple(spokes))


def central_signatures(A: Arrangement) -> list[CentralSignature]:
    return [central_signature(A, z) for z in find_centrexes(A)]


def arrangement_signature(A: Arrangement) -> Optional[tuple]:
    """Minimum canonical signature over all centrexes, or None."""
    sigs = [s.canonical() for s in central_signatures(A)]
    return min(sigs) if sigs else None


# -- linear spaces and the de Bruijn-Erdos bound ---------------------------


def _structure_is_linear_space(s: IncidenceStructure) -> bool:
    # lines must be point sets of size two or more, and every pair of
    # points must be joined
    if any(len(x) < 2 for x in s.line_points()):
        return False
    pl = s.point_lines()
    return all(pl[a] & pl[b] for a, b in combinations(range(s.k), 2))


def is_linear_space(A: Arrangement) -> bool:
    return _structure_is_linear_space(incidence_structure(A))


@dataclass
class DeBruijnErdosReport:
    n: int
    k: int
    linear_space: bool
    bound_holds: bool  # n >= k, vacuously true off linear spaces
    equality: bool
    near_pencil: bool
    anomaly: Optional[str] = None

    def __str__(self):
        if not self.linear_space:
            return f"not a linear space; bound n >= k not applicable (n={self.n}, k={self.k})"
        mark = "✓" if self.bound_holds else "✗"
        text = f"n ≥ k: {self.n} ≥ {self.k} {mark}"
        if self.equality:
            text += "; equality case: " + ("near-pencil" if self.near_pencil else "not a near-pencil")
        if self.anomaly:
            text += f"; ANOMALY: {self.anomaly}"
        return text


def _is_near_pencil_structure(s: IncidenceStructure) -> bool:
    if s.k < 3 or s.n != s.k:
        return False
    lp = s.line_points()
    for b in range(s.n):
        if len(lp[b]) != s.k - 1:
            continue
        apex = next(iter(set(range(s.k)) - lp[b]))
        others = [j for j in range(s.n) if j != b]
        if all(len(lp[j]) == 2 and apex in lp[j] for j in others):
            return True
    return False


def debruijn_erdos_check(A: Arrangement) -> DeBruijnErdosReport:
    if A.k < 3:
        raise TooFewPoints(f"need k >= 3, got {A.k}")
    s = incidence_structure(A)
    lin = _structure_is_linear_space(s)
    rep = DeBruijnErdosReport(A.n, A.k, lin, True, False, False)
    if not lin:
        return rep
    rep.bound_holds = A.n >= A.k
    if not rep.bound_holds:
        rep.anomaly = "linear space with fewer lines than points"
    if A.n == A.k:
        rep.equality = True
        rep.near_pencil = _is_near_pencil_structure(s)
        if not rep.near_pencil:
            sizes = {len(x) for x in s.line_points()}
            degs = {len(x) for x in s.point_lines()}
            kind = "projective-plane pattern" if len(sizes) == 1 and sizes == degs else "unexpected pattern"
            rep.anomaly = f"equality n = k without near-pencil structure ({kind})"
    return rep


# -- family classification ----------------------------------------------


def classify_structure(s: IncidenceStructure) -> Optional[FamilyKind]:
    if s.k < 3:
        raise TooFewPoints(f"need k >= 3, got {s.k}")
    k, n = s.k, s.n
    lp = s.line_points()
    if _is_near_pencil_structure(s):
        return FamilyKind.NearPencil
    big = [j for j in range(n) if len(lp[j]) == k]
    if len(big) == 1 and n == k + 1 and all(len(lp[j]) == 1 for j in range(n) if j != big[0]):
        return FamilyKind.Railtrack
    if n == k + 1:
        singles = [j for j in range(n) if len(lp[j]) == 1]
        if len(singles) == 1:
            a = singles[0]
            apex = next(iter(lp[a]))
            for b in range(n):
                if b == a or len(lp[b]) != k - 1 or apex in lp[b] or (lp[a] & lp[b]):
                    continue
                rest = [j for j in range(n) if j not in (a, b)]
                if all(len(lp[j]) == 2 and apex in lp[j] for j in rest):
                    return FamilyKind.AugmentedNearPencil
    return None


def classify(A: Arrangement) -> Optional[FamilyKind]:
    if A.k < 3:
        raise TooFewPoints(f"need k >= 3, got {A.k}")
    return classify_structure(incidence_structure(A))


# -- affine / projective equivalence --------------------------------------


def _hom(p: Point):
    return (p.x, p.y, Fraction(1))


def _line_vec(l: Line):
    return (Fraction(l.a), Fraction(l.b), Fraction(-l.c))


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


@dataclass
class Transformation:
    """3x3 rational matrix acting on homogeneous points ``(x, y, 1)``."""

    matrix: tuple
    mode: str
    point_map: dict = field(default_factory=dict)
    line_map: dict = field(default_factory=dict)

    def apply(self, p: Point) -> Optional[Point]:
        h = _hom(p)
        x, y, w = (sum(self.matrix[r][c] * h[c] for c in range(3)) for r in range(3))
        if w == 0:
            return None
        return Point(x / w, y / w)

    def apply_line(self, l: Line) -> Optional[Line]:
        m = self.matrix
        # cofactor matrix is proportional to the inverse transpose
        cof = [[_cofactor(m, r, c) for c in range(3)] for r in range(3)]
        v = _line_vec(l)
        a, b, c = (sum(cof[r][i] * v[i] for i in range(3)) for r in range(3))
        if a == 0 and b == 0:
            return None
        return Line(a, b, -c)

    def __str__(self):
        rows = ["[" + " ".join(_fmtq(x) for x in row) + "]" for row in self.matrix]
        return "\n".join(rows)


def _fmtq(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _cofactor(m, r, c):
    rows = [i for i in range(3) if i != r]
    cols = [j for j in range(3) if j != c]
    minor = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
    return minor if (r + c) % 2 == 0 else -minor


def _det3(m):
    return sum(m[0][c] * _cofactor(m, 0, c) for c in range(3))


_COEFFS = [Fraction(x) for x in (1, 2, -1, 3, -2, 5)]


def _affine_rows(pairs_p, pairs_l):
    # unknowns: m11 m12 m21 m22 t1 t2 w
    rows = []
    for p, q in pairs_p:
        rows.append([p.x, p.y, 0, 0, 1, 0, -q.x])
        rows.append([0, 0, p.x, p.y, 0, 1, -q.y])
    for l, m in pairs_l:
        d, e = slope_of(l), slope_of(m)
        # (M d) x e = 0
        rows.append([d.dx * e.dy, d.dy * e.dy, -d.dx * e.dx, -d.dy * e.dx, 0, 0, 0])
    return rows


def _projective_rows(pairs_p, pairs_l):
    rows = []
    for p, q in pairs_p:
        ph, qh = _hom(p), _hom(q)
        # (H p) x q = 0; H entries h[r][c] at index 3r + c
        for i in range(3):
            a, b = (i + 1) % 3, (i + 2) % 3
            row = [Fraction(0)] * 9
            for c in range(3):
                row[3 * a + c] += ph[c] * qh[b]
                row[3 * b + c] -= ph[c] * qh[a]
            rows.append(row)
    for l, m in pairs_l:
        lv, mv = _line_vec(l), _line_vec(m)
        # (H^T m) x l = 0, with (H^T m)_c = sum_r h[r][c] m_r
        for i in range(3):
            a, b = (i + 1) % 3, (i + 2) % 3
            row = [Fraction(0)] * 9
            for r in range(3):
                row[3 * r + a] += mv[r] * lv[b]
                row[3 * r + b] -= mv[r] * lv[a]
            rows.append(row)
    return rows


def _nullspace(rows, width):
    M = sympy.Matrix(rows) if rows else sympy.zeros(0, width)
    basis = M.nullspace() if rows else [sympy.eye(width)[:, i] for i in range(width)]
    return [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in v] for v in basis]


def _candidate_matrices(basis, mode):
    r = len(basis)
    if r == 0:
        return
    width = len(basis[0])
    tried = 0
    for coeffs in product(_COEFFS, repeat=r):
        tried += 1
        if tried > 400:
            return
        h = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(width)]
        if mode == "affine":
            w = h[6]
            if w == 0:
                continue
            m11, m12, m21, m22, t1, t2 = (x / w for x in h[:6])
            yield ((m11, m12, t1), (m21, m22, t2), (Fraction(0), Fraction(0), Fraction(1)))
        else:
            yield tuple(tuple(h[3 * i + j] for j in range(3)) for i in range(3))


def _check(T: Transformation, A1: Arrangement, pmap: dict, lmap: dict) -> bool:
    if _det3(T.matrix) == 0:
        return False
    for p, q in pmap.items():
        if T.apply(p) != q:
            return False
    for l, m in lmap.items():
        if T.apply_line(l) != m:
            return False
    return True


def projective_equivalent(A1: Arrangement, A2: Arrangement, mode: str = "affine") -> Optional[Transformation]:
    """Search for an affine or projective map carrying A1 onto A2.

    Candidate correspondences come from incidence isomorphisms; each is
    solved exactly as a homogeneous linear system and the resulting map is
    checked on every point and line. Maps sending a mark to infinity are
    rejected.
    """
    if mode not in ("affine", "projective"):
        raise ValueError(f"unknown mode {mode!r}")
    need = 3 if mode == "affine" else 4
    for A in (A1, A2):
        if A.k < need:
            raise UnsupportedDegenerate(f"{mode} equivalence needs k >= {need}, got {A.k}")
    if summary_triple(A1) != summary_triple(A2):
        return None
    s1, s2 = incidence_structure(A1), incidence_structure(A2)
    P1, P2 = A1.sorted_points(), A2.sorted_points()
    L1, L2 = A1.sorted_lines(), A2.sorted_lines()
    for pm, lm in iter_isomorphisms(s1, s2):
        pmap = {P1[i]: P2[j] for i, j in pm.items()}
        lmap = {L1[i]: L2[j] for i, j in lm.items()}
        if mode == "affine":
            rows, width = _affine_rows(pmap.items(), lmap.items()), 7
        else:
            rows, width = _projective_rows(pmap.items(), lmap.items()), 9
        basis = _nullspace(rows, width)
        for mat in _candidate_matrices(basis, mode):
            T = Transformation(mat, mode, pmap, lmap)
            if _check(T, A1, pmap, lmap):
                return T
    return None


# -- comparison ladder ----------------------------------------------------


def degree_type_multiset(A: Arrangement) -> tuple:
    return tuple(sorted(point_line_degree_type(A, p).vector for p in A.sorted_points()))


def first_distinguishing_measure(A1: Arrangement, A2: Arrangement) -> Optional[tuple[int, str]]:
    """The first of measures (1)-(4) that separates the two arrangements."""
    t1, t2 = summary_triple(A1), summary_triple(A2)
    if t1 != t2:
        return 1, f"summary triple {t1} vs {t2}"
    v1, v2 = type_vectors(A1), type_vectors(A2)
    for name, a, b in (
        ("line type", v1.line_type(), v2.line_type()),
        ("slope type", v1.slope_type(), v2.slope_type()),
        ("point type", v1.p, v2.p),
    ):
        if a != b:
            return 2, f"{name} {a} vs {b}"
    if degree_type_multiset(A1) != degree_type_multiset(A2):
        return 3, "point-line degree types differ"
    if is_isomorphic(A1, A2) is None:
        return 3, "incidence relations are not isomorphic"
    g1, g2 = arrangement_signature(A1), arrangement_signature(A2)
    if g1 != g2:
        return 4, f"central signature {g1} vs {g2}"
    return None

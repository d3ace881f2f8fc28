"""Enumeration of arrangements with exactly k registration marks.

Two stages. Abstract incidence structures are generated line by line: every
sub-set of lines of an arrangement is itself an arrangement, so the
structures with ``n`` lines and at most ``k`` marks are exactly the
one-line extensions of those with ``n - 1`` lines, deduplicated by
canonical code. Each structure with exactly ``k`` marks is then either
refuted by a necessary condition for real line arrangements or handed to
the geometric realizer. Whatever neither settles is reported as undecided.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional

from .arrangement import Arrangement, FamilyKind
from .canonical import IncidenceStructure, canonical_labeling
from .geometry import Line, Point, line_through
from .invariants import (
    SummaryTriple,
    TypeVectors,
    canonical_code,
    central_signatures,
    classify,
    is_linear_space,
    summary_triple,
    type_vectors,
)
from .realization import RealizationBudget, RealizationResult, realize


@dataclass(frozen=True)
class AbstractCandidate:
    """Canonically labeled incidence structure; ``point_sets[i]`` is the set of
    lines through point ``i``."""

    n: int
    point_sets: tuple
    code: bytes

    @property
    def k(self) -> int:
        return len(self.point_sets)

    @cached_property
    def incidences(self) -> IncidenceStructure:
        return IncidenceStructure.from_point_sets(self.n, self.point_sets)

    @cached_property
    def parallel_classes(self) -> tuple:
        return tuple(self.incidences.parallel_classes())


def _canonical(n: int, point_sets) -> AbstractCandidate:
    s = IncidenceStructure.from_point_sets(n, point_sets)
    lab = canonical_labeling(s)
    line_pos = {old: new for new, old in enumerate(lab.line_order)}
    relabeled = tuple(frozenset(line_pos[j] for j in point_sets[i]) for i in lab.point_order)
    return AbstractCandidate(n, relabeled, lab.code)


def _extensions(c: AbstractCandidate, max_points: int):
    """Point sets of every valid one-line extension with at most max_points marks."""
    n, pts = c.n, c.point_sets
    classes = list(c.parallel_classes) if n else []
    new = n
    for cls in classes + [frozenset()]:
        outside = [j for j in range(n) if j not in cls]
        eligible = [i for i, ls in enumerate(pts) if not (ls & cls)]

        def subsets(start, chosen, covered):
            yield chosen, covered
            for idx in range(start, len(eligible)):
                i = eligible[idx]
                if pts[i] & covered:
                    continue
                yield from subsets(idx + 1, chosen + [i], covered | pts[i])

        for chosen, covered in subsets(0, [], frozenset()):
            fresh = [j for j in outside if j not in covered]
            if len(pts) + len(fresh) > max_points:
                continue
            chosen_set = set(chosen)
            out = [ls | {new} if i in chosen_set else ls for i, ls in enumerate(pts)]
            out += [frozenset({j, new}) for j in fresh]
            yield out


_LEVELS: dict[int, list[dict]] = {}


def _levels(max_points: int, n_max: int) -> list[dict]:
    levels = _LEVELS.setdefault(max_points, [{}])
    if len(levels) == 1:
        levels[0] = {}
        empty = AbstractCandidate(0, (), b"0.0:")
        levels[0][empty.code] = empty
    while len(levels) <= n_max:
        nxt: dict[bytes, AbstractCandidate] = {}
        for c in levels[-1].values():
            for point_sets in _extensions(c, max_points):
                child = _canonical(c.n + 1, point_sets)
                nxt.setdefault(child.code, child)
        levels.append(dict(sorted(nxt.items())))
    return levels


def abstract_candidates(k: int, n: int) -> list[AbstractCandidate]:
    """Non-isomorphic structures with k marks and n lines: every mark on two
    or more lines, lines sharing at most one mark, and sharing no mark an
    equivalence relation whose distinct classes always meet."""
    return [c for c in _levels(k, n)[n].values() if c.k == k]


# -- refutation ---------------------------------------------------------------


def _melchior_ok(multiplicities: list[int], lines: int) -> bool:
    # t2 >= 3 + sum_{r >= 4} (r - 3) t_r for real projective arrangements
    # that are not a pencil
    if lines < 3:
        return True
    t2 = sum(1 for r in multiplicities if r == 2)
    excess = sum(r - 3 for r in multiplicities if r >= 4)
    return t2 >= 3 + excess


def melchior_violation(s: IncidenceStructure) -> Optional[str]:
    if s.k < 2:
        return None
    finite = [len(x) for x in s.point_lines()]
    classes = [len(c) for c in s.parallel_classes()]
    plain = finite + [c for c in classes if c >= 2]
    if not _melchior_ok(plain, s.n):
        return f"Melchior's inequality fails for the projective closure (multiplicities {sorted(plain)})"
    closed = finite + [c + 1 for c in classes]
    if not _melchior_ok(closed, s.n + 1):
        return f"Melchior's inequality fails with the line at infinity added (multiplicities {sorted(closed)})"
    return None


_REFUTED: dict[bytes, Optional[str]] = {}


def _delete_line(c: AbstractCandidate, j: int) -> AbstractCandidate:
    remap = {old: old - (old > j) for old in range(c.n) if old != j}
    pts = [frozenset(remap[x] for x in ls if x != j) for ls in c.point_sets]
    return _canonical(c.n - 1, [ls for ls in pts if len(ls) >= 2])


def refutation(c: AbstractCandidate) -> Optional[str]:
    """Reason the candidate cannot be drawn with straight lines, if one is known.

    Checks Melchior's inequality on the candidate and, recursively, on every
    sub-arrangement obtained by deleting lines.
    """
    if c.code in _REFUTED:
        return _REFUTED[c.code]
    reason = melchior_violation(c.incidences)
    if reason is None and c.n > 3 and c.k >= 2:
        for j in range(c.n):
            sub = _delete_line(c, j)
            r = refutation(sub)
            if r is not None:
                reason = f"sub-arrangement without line {j} is refuted: {r}"
                break
    _REFUTED[c.code] = reason
    return reason


def settle(c: AbstractCandidate, budget: RealizationBudget = RealizationBudget()) -> RealizationResult:
    reason = refutation(c)
    if reason is not None:
        return RealizationResult("refuted", None, reason)
    return realize(c, budget)


# -- catalog ----------------------------------------------------------------


@dataclass
class CatalogEntry:
    arrangement: Arrangement
    code: bytes
    triple: SummaryTriple
    vectors: TypeVectors
    family: Optional[FamilyKind]
    linear_space: bool
    signatures: list  # CentralSignature per centrex

    @classmethod
    def build(cls, A: Arrangement) -> "CatalogEntry":
        return cls(
            A,
            canonical_code(A),
            summary_triple(A),
            type_vectors(A),
            classify(A) if A.k >= 3 else None,
            is_linear_space(A),
            central_signatures(A),
        )

    @property
    def signature(self) -> Optional[tuple]:
        sigs = [s.canonical() for s in self.signatures]
        return min(sigs) if sigs else None


@dataclass
class CellStats:
    abstract: int = 0
    realized: int = 0
    undecided: int = 0
    refuted: int = 0


@dataclass
class Catalog:
    k: int
    n_max: int
    entries: list = field(default_factory=list)
    undecided: list = field(default_factory=list)  # (candidate, result)
    refuted: list = field(default_factory=list)  # (candidate, result)
    cells: dict = field(default_factory=dict)  # n -> CellStats


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("ARRANGEMENTS_WORKERS", "1")))
    except ValueError:
        return 1


def default_budget() -> RealizationBudget:
    seed = int(os.environ.get("ARRANGEMENTS_SEED", "0"))
    return RealizationBudget(seed=seed)


def enumerate_arrangements(k: int, n_max: Optional[int] = None, budget: Optional[RealizationBudget] = None) -> Catalog:
    """All incidence classes of arrangements with exactly k marks and at most
    n_max lines (default k + 2) that the realizer could draw."""
    if k < 2:
        raise ValueError("k = 0 and k = 1 are infinite families; enumerate needs k >= 2")
    n_max = k + 2 if n_max is None else n_max
    budget = budget or default_budget()
    cat = Catalog(k, n_max)
    cands = [c for n in range(2, n_max + 1) for c in abstract_candidates(k, n)]
    workers = _workers()
    if workers > 1 and len(cands) > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(settle, cands, [budget] * len(cands)))
    else:
        results = [settle(c, budget) for c in cands]
    for n in range(2, n_max + 1):
        cat.cells[n] = CellStats()
    for c, res in zip(cands, results):
        cell = cat.cells[c.n]
        cell.abstract += 1
        if res.status == "realized":
            cell.realized += 1
            cat.entries.append(CatalogEntry.build(res.arrangement))
        elif res.status == "refuted":
            cell.refuted += 1
            cat.refuted.append((c, res))
        else:
            cell.undecided += 1
            cat.undecided.append((c, res))
    cat.entries.sort(key=lambda e: (e.triple.astuple(), e.code))
    return cat


@dataclass
class ConjectureReport:
    k: int
    n_max_searched: int
    realized_max_n: int
    abstract_candidates_above_bound: int
    realized_above_bound: int
    undecided_above_bound: int
    refuted_above_bound: int
    s_min: int
    s_max: int
    undecided: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.realized_above_bound == 0

    def __str__(self):
        lines = [
            f"k = {self.k}, lines searched up to n = {self.n_max_searched}",
            f"largest realized n: {self.realized_max_n} (bound k+1 = {self.k + 1})",
            f"abstract candidates above bound: {self.abstract_candidates_above_bound}",
            f"  realized: {self.realized_above_bound}",
            f"  refuted: {self.refuted_above_bound}",
            f"  undecided: {self.undecided_above_bound}",
            f"slope counts over realized entries: [{self.s_min}, {self.s_max}]",
            "consistent with at most k+1 lines" if self.consistent else "COUNTEREXAMPLE FOUND",
        ]
        for c in self.undecided:
            lines.append(f"  undecided candidate n={c.n}: {c.code.decode()}")
        return "\n".join(lines)


def verify_conjecture(k: int, n_max: Optional[int] = None, budget: Optional[RealizationBudget] = None) -> ConjectureReport:
    if k < 3:
        raise ValueError("the line bound concerns k >= 3")
    n_max = k + 2 if n_max is None else n_max
    if n_max < k + 2:
        raise ValueError("n_max must reach at least k + 2 to probe the bound")
    cat = enumerate_arrangements(k, n_max, budget)
    bound = k + 1
    above = [n for n in cat.cells if n > bound]
    slopes = [e.triple.s for e in cat.entries]
    return ConjectureReport(
        k=k,
        n_max_searched=n_max,
        realized_max_n=max((e.triple.n for e in cat.entries), default=0),
        abstract_candidates_above_bound=sum(cat.cells[n].abstract for n in above),
        realized_above_bound=sum(cat.cells[n].realized for n in above),
        undecided_above_bound=sum(cat.cells[n].undecided for n in above),
        refuted_above_bound=sum(cat.cells[n].refuted for n in above),
        s_min=min(slopes, default=0),
        s_max=max(slopes, default=0),
        undecided=[c for c, _ in cat.undecided if c.n > bound],
    )


# -- independent lower-bound oracle -----------------------------------------


def grid_lines(g: int) -> list[Line]:
    pts = [Point(x, y) for x in range(g) for y in range(g)]
    return sorted({line_through(p, q) for p, q in combinations(pts, 2)})


def grid_oracle(k: int, g: int, n_max: int) -> set[bytes]:
    """Canonical codes of every arrangement with exactly k marks formed by at
    most n_max lines through pairs of points of the g x g integer grid."""
    if g < 3:
        raise ValueError("grid size must be at least 3")
    from .geometry import intersect

    lines = grid_lines(g)
    pid: dict[Point, int] = {}
    on_line: list[list[int]] = [[] for _ in lines]
    for a, b in combinations(range(len(lines)), 2):
        x = intersect(lines[a], lines[b])
        if x is None:
            continue
        if x not in pid:
            pid[x] = len(pid)
    for p, idx in pid.items():
        for j, l in enumerate(lines):
            if l.contains(p):
                on_line[j].append(idx)
    deg = [0] * len(pid)
    codes: set[bytes] = set()
    chosen: list[int] = []

    def emit():
        present = sorted(q for j in chosen for q in on_line[j] if deg[q] >= 2)
        present = sorted(set(present))
        index = {q: i for i, q in enumerate(present)}
        inc = frozenset((index[q], jj) for jj, j in enumerate(chosen) for q in on_line[j] if q in index)
        codes.add(canonical_labeling(IncidenceStructure(len(present), len(chosen), inc)).code)

    def rec(start, count):
        if count == k and len(chosen) >= 1:
            emit()
        if len(chosen) == n_max:
            return
        for j in range(start, len(lines)):
            added = 0
            for q in on_line[j]:
                deg[q] += 1
                if deg[q] == 2:
                    added += 1
            chosen.append(j)
            if count + added <= k:
                rec(j + 1, count + added)
            chosen.pop()
            for q in on_line[j]:
                deg[q] -= 1

    rec(0, 0)
    return codes

"""Exact geometric realization of abstract arrangement candidates.

Points are placed one at a time. A point whose lines already include two
determined lines is forced to their crossing; a point on one determined
line is tried at rational steps along it; otherwise it goes on a small
integer grid. The first two free points are fixed at (0, 0) and (1, 0), and
the third at (0, 1) or on the x-axis, which loses nothing up to affine maps.
Every partial placement is checked exactly, and the final line set is
accepted only if its canonical code matches the candidate's.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .arrangement import Arrangement, from_lines
from .geometry import Line, Point, Slope, intersect, line_through, line_with_direction, slope_of
from .invariants import canonical_code


@dataclass(frozen=True)
class RealizationBudget:
    # (grid radius, ladder height, node limit) per stage
    stages: tuple = ((2, 2, 4000), (3, 3, 20000), (4, 4, 60000))
    retries: int = 1
    seed: int = 0


@dataclass
class RealizationResult:
    status: str  # "realized" | "undecided" | "refuted"
    arrangement: Optional[Arrangement] = None
    reason: str = ""
    nodes: int = 0


def ladder(height: int) -> list[Fraction]:
    """Nonzero rationals p/q with max(|p|, q) <= height: 1, -1, 1/2, 2, -1/2, -2, ..."""
    seen, out = set(), []
    for h in range(1, height + 1):
        level = []
        for q in range(1, h + 1):
            for p in range(1, h + 1):
                if max(p, q) != h or gcd(p, q) != 1:
                    continue
                level.append(Fraction(p, q))
        level.sort(key=lambda x: (x.numerator + x.denominator, x))
        for x in level:
            for v in (x, -x):
                if v not in seen:
                    seen.add(v)
                    out.append(v)
    return out


def grid(radius: int) -> list[Point]:
    pts = [Point(x, y) for x in range(-radius, radius + 1) for y in range(-radius, radius + 1)]
    pts.sort(key=lambda p: (max(abs(p.x), abs(p.y)), abs(p.x) + abs(p.y), p.x, p.y))
    return pts


def _directions(limit: int = 5) -> list[Slope]:
    out = set()
    for dx in range(0, limit + 1):
        for dy in range(-limit, limit + 1):
            if (dx, dy) != (0, 0) and gcd(dx, dy) == 1:
                out.add(Slope(dx, dy))
    return sorted(out, key=lambda s: (abs(s.dx) + abs(s.dy), s.dx, s.dy))


_DIRECTIONS = _directions()


class _OutOfNodes(Exception):
    pass


class Realizer:
    def __init__(self, candidate):
        self.cand = candidate
        self.k, self.n = candidate.k, candidate.n
        self.point_lines = [sorted(ps) for ps in candidate.point_sets]
        self.line_points = [[i for i in range(self.k) if j in candidate.point_sets[i]] for j in range(self.n)]
        self.class_of = {}
        for ci, c in enumerate(candidate.parallel_classes):
            for j in c:
                self.class_of[j] = ci
        self.order = self._order()

    def _order(self) -> list[int]:
        order: list[int] = []
        placed = set()
        while len(order) < self.k:
            best, best_key = None, None
            for i in range(self.k):
                if i in placed:
                    continue
                full = sum(1 for j in self.point_lines[i] if sum(1 for q in self.line_points[j] if q in placed) >= 2)
                touched = sum(1 for j in self.point_lines[i] if any(q in placed for q in self.line_points[j]))
                key = (full, touched, len(self.point_lines[i]), -i)
                if best_key is None or key > best_key:
                    best, best_key = i, key
            order.append(best)
            placed.add(best)
        return order

    def determined(self, placed: dict) -> Optional[dict]:
        """Lines fixed by the placement, or None if it already breaks the candidate."""
        det: dict[int, Line] = {}
        for j in range(self.n):
            pts = [placed[i] for i in self.line_points[j] if i in placed]
            if len(pts) >= 2:
                L = line_through(pts[0], pts[1])
                if any(not L.contains(p) for p in pts[2:]):
                    return None
                det[j] = L
        cdir: dict[int, Slope] = {}
        for j, L in det.items():
            c, s = self.class_of[j], slope_of(L)
            if cdir.setdefault(c, s) != s:
                return None
        if len(set(cdir.values())) != len(cdir):
            return None
        for j in range(self.n):
            if j in det or self.class_of[j] not in cdir:
                continue
            pts = [placed[i] for i in self.line_points[j] if i in placed]
            if len(pts) == 1:
                det[j] = line_with_direction(pts[0], cdir[self.class_of[j]])
        for j, L in det.items():
            on = set(self.line_points[j])
            for i, p in placed.items():
                if i not in on and L.contains(p):
                    return None
        return det

    def options(self, depth, i, placed, det, grid_pts, steps, rng):
        dets = [det[j] for j in self.point_lines[i] if j in det]
        if len(dets) >= 2:
            if dets[0] == dets[1]:
                return []
            x = intersect(dets[0], dets[1])
            return [] if x is None else [x]
        if len(dets) == 1:
            L = dets[0]
            j = next(j for j in self.point_lines[i] if j in det)
            base = next(placed[q] for q in self.line_points[j] if q in placed)
            d = slope_of(L)
            return [base.translate(t * d.dx, t * d.dy) for t in steps]
        if depth == 0:
            return [Point(0, 0)]
        if depth == 1:
            return [Point(1, 0)]
        if depth == 2:
            return [Point(0, 1)] + [Point(t, 0) for t in steps]
        pts = list(grid_pts)
        if rng is not None:
            rng.shuffle(pts)
        return pts

    def finish(self, placed, det) -> Optional[Arrangement]:
        lines = dict(det)
        used = {slope_of(L) for L in det.values()}
        open_classes: dict[int, list[int]] = {}
        for j in range(self.n):
            if j not in lines:
                open_classes.setdefault(self.class_of[j], []).append(j)
        others = list(placed.items())
        for c in sorted(open_classes):
            for d in _DIRECTIONS:
                if d in used:
                    continue
                trial = {}
                ok = True
                for j in open_classes[c]:
                    (i,) = self.line_points[j]
                    L = line_with_direction(placed[i], d)
                    if any(q != i and L.contains(p) for q, p in others):
                        ok = False
                        break
                    trial[j] = L
                if ok:
                    lines.update(trial)
                    used.add(d)
                    break
            else:
                return None
        A = from_lines(lines.values())
        if A.k != self.k or canonical_code(A) != self.cand.code:
            return None
        return A

    def search(self, radius, height, node_limit, rng=None) -> tuple[Optional[Arrangement], int]:
        grid_pts = grid(radius)
        steps = ladder(height)
        nodes = [0]

        def rec(depth, placed):
            if depth == self.k:
                det = self.determined(placed)
                return self.finish(placed, det) if det is not None else None
            i = self.order[depth]
            det = self.determined(placed)
            if det is None:
                return None
            for x in self.options(depth, i, placed, det, grid_pts, steps, rng):
                if x in placed.values():
                    continue
                nodes[0] += 1
                if nodes[0] > node_limit:
                    raise _OutOfNodes
                placed[i] = x
                if self.determined(placed) is not None:
                    found = rec(depth + 1, placed)
                    if found is not None:
                        return found
                del placed[i]
            return None

        try:
            return rec(0, {}), nodes[0]
        except _OutOfNodes:
            return None, nodes[0]


def realize(candidate, budget: RealizationBudget = RealizationBudget()) -> RealizationResult:
    r = Realizer(candidate)
    total = 0
    for attempt in range(budget.retries + 1):
        rng = None if attempt == 0 else random.Random(budget.seed * 1000003 + attempt)
        for radius, height, limit in budget.stages:
            A, used = r.search(radius, height, limit, rng)
            total += used
            if A is not None:
                return RealizationResult("realized", A, nodes=total)
    return RealizationResult("undecided", None, "search budget exhausted", nodes=total)

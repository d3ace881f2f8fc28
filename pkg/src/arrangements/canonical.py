"""Canonical labeling of point-line incidence structures.

The structure is treated as a bipartite graph whose vertices are the ``k``
points followed by the ``n`` lines. Labeling is by colour refinement plus
individualization, keeping the lexicographically smallest incidence
encoding over all leaves of the search tree. Automorphisms discovered at
leaves prune sibling branches that lie in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class IncidenceStructure:
    """Points ``0..k-1``, lines ``0..n-1`` and a set of (point, line) pairs."""

    k: int
    n: int
    incidences: frozenset

    @classmethod
    def from_point_sets(cls, n: int, point_sets: Sequence) -> "IncidenceStructure":
        inc = frozenset((i, j) for i, lines in enumerate(point_sets) for j in lines)
        return cls(len(point_sets), n, inc)

    def point_lines(self) -> list[frozenset]:
        out = [set() for _ in range(self.k)]
        for i, j in self.incidences:
            out[i].add(j)
        return [frozenset(s) for s in out]

    def line_points(self) -> list[frozenset]:
        out = [set() for _ in range(self.n)]
        for i, j in self.incidences:
            out[j].add(i)
        return [frozenset(s) for s in out]

    def adjacency(self) -> list[frozenset]:
        adj = [set() for _ in range(self.k + self.n)]
        for i, j in self.incidences:
            adj[i].add(self.k + j)
            adj[self.k + j].add(i)
        return [frozenset(a) for a in adj]

    def parallel_classes(self) -> list[frozenset]:
        """Lines grouped by the shares-no-point relation.

        Valid only for structures with at least one point on every line
        pair's union; with no points at all every line lands in one class.
        """
        lp = self.line_points()
        classes: list[list[int]] = []
        for j in range(self.n):
            for c in classes:
                if not (lp[j] & lp[c[0]]):
                    c.append(j)
                    break
            else:
                classes.append([j])
        return [frozenset(c) for c in classes]


def refine(cells: list[tuple], adj: Sequence[frozenset]) -> list[tuple]:
    """Equitable refinement of an ordered partition.

    Cells split by the multiset of neighbour cell indices; new cells are
    ordered by that signature so the result does not depend on labels.
    """
    while True:
        where = {}
        for ci, c in enumerate(cells):
            for v in c:
                where[v] = ci
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list] = {}
            for v in c:
                sig = tuple(sorted(where[u] for u in adj[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            for sig in sorted(groups):
                out.append(tuple(groups[sig]))
        cells = out
        if not split:
            return cells


class _Orbits:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class Labeling:
    code: bytes
    point_order: tuple  # canonical position -> original point index
    line_order: tuple  # canonical position -> original line index


def _initial_cells(k, n):
    cells = []
    if k:
        cells.append(tuple(range(k)))
    if n:
        cells.append(tuple(range(k, k + n)))
    return cells


def _encode(k, n, lab, adj):
    pos = {v: i for i, v in enumerate(lab)}
    rows = []
    for p in lab[:k]:
        r = 0
        for u in adj[p]:
            r |= 1 << (pos[u] - k)
        rows.append(r)
    return tuple(rows)


def canonical_labeling(s: IncidenceStructure) -> Labeling:
    k, n = s.k, s.n
    adj = s.adjacency()
    size = k + n
    best: list = [None, None]  # encoding, labeling
    autos: list[tuple] = []

    def record_auto(lab_a, lab_b):
        perm = [0] * size
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        perm = tuple(perm)
        if perm != tuple(range(size)):
            autos.append(perm)

    def orbits_fixing(prefix):
        orb = _Orbits(size)
        for g in autos:
            if all(g[v] == v for v in prefix):
                for v in range(size):
                    orb.union(v, g[v])
        return orb

    def search(cells, prefix):
        cells = refine(cells, adj)
        ti = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if ti is None:
            lab = tuple(c[0] for c in cells)
            enc = _encode(k, n, lab, adj)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, lab
            elif enc == best[0]:
                record_auto(best[1], lab)
            return
        target = cells[ti]
        explored = []
        for v in sorted(target):
            if explored:
                orb = orbits_fixing(prefix)
                rv = orb.find(v)
                if any(orb.find(u) == rv for u in explored):
                    continue
            rest = tuple(x for x in target if x != v)
            search(cells[:ti] + [(v,), rest] + cells[ti + 1:], prefix + [v])
            explored.append(v)

    search(_initial_cells(k, n), [])
    enc, lab = best
    if lab is None:
        lab = ()
        enc = ()
    body = ".".join(format(r, "x") for r in enc)
    code = f"{k}.{n}:{body}".encode()
    return Labeling(code, tuple(lab[:k]), tuple(v - k for v in lab[k:]))


def canonical_code(s: IncidenceStructure) -> bytes:
    return canonical_labeling(s).code


def isomorphism(s1: IncidenceStructure, s2: IncidenceStructure) -> Optional[tuple[dict, dict]]:
    """One (point map, line map) pair carrying s1's incidences onto s2's."""
    if (s1.k, s1.n, len(s1.incidences)) != (s2.k, s2.n, len(s2.incidences)):
        return None
    a, b = canonical_labeling(s1), canonical_labeling(s2)
    if a.code != b.code:
        return None
    pmap = dict(zip(a.point_order, b.point_order))
    lmap = dict(zip(a.line_order, b.line_order))
    return pmap, lmap


def iter_isomorphisms(s1: IncidenceStructure, s2: IncidenceStructure) -> Iterator[tuple[dict, dict]]:
    """All incidence-preserving bijections s1 -> s2, by refined backtracking."""
    if (s1.k, s1.n, len(s1.incidences)) != (s2.k, s2.n, len(s2.incidences)):
        return
    k, n = s1.k, s1.n
    adj1, adj2 = s1.adjacency(), s2.adjacency()
    c1 = refine(_initial_cells(k, n), adj1)
    c2 = refine(_initial_cells(k, n), adj2)
    if [len(c) for c in c1] != [len(c) for c in c2]:
        return
    colour1 = {v: i for i, c in enumerate(c1) for v in c}
    cands = {i: c2[i] for i in range(len(c2))}
    # connected-first ordering keeps the adjacency checks tight
    order, seen = [], set()
    for start in sorted(range(k + n), key=lambda v: (len(c1[colour1[v]]), v)):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(adj1[v]):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    phi: dict[int, int] = {}
    used: set = set()

    def bt(depth):
        if depth == len(order):
            pmap = {v: phi[v] for v in range(k)}
            lmap = {v - k: phi[v] - k for v in range(k, k + n)}
            yield pmap, lmap
            return
        v = order[depth]
        for w in cands[colour1[v]]:
            if w in used:
                continue
            ok = True
            for u, wu in phi.items():
                if (u in adj1[v]) != (wu in adj2[w]):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used.add(w)
            yield from bt(depth + 1)
            del phi[v]
            used.discard(w)

    yield from bt(0)

from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from arrangements.canonical import (
    IncidenceStructure,
    canonical_code,
    canonical_labeling,
    isomorphism,
    iter_isomorphisms,
)


def naive_form(s: IncidenceStructure):
    # brute force: minimum over line permutations of the sorted point rows
    best = None
    for perm in permutations(range(s.n)):
        rows = tuple(sorted(tuple(sorted(perm[j] for j in ls)) for ls in s.point_lines()))
        if best is None or rows < best:
            best = rows
    return best


@st.composite
def structures(draw, max_k=5, max_n=5):
    k = draw(st.integers(0, max_k))
    n = draw(st.integers(0, max_n))
    inc = draw(st.sets(st.tuples(st.integers(0, max(k - 1, 0)), st.integers(0, max(n - 1, 0)))))
    inc = frozenset((i, j) for i, j in inc if i < k and j < n)
    return IncidenceStructure(k, n, inc)


def relabel(s, pperm, lperm):
    return IncidenceStructure(s.k, s.n, frozenset((pperm[i], lperm[j]) for i, j in s.incidences))


@given(structures(), st.randoms())
def test_code_invariant_under_relabeling(s, rnd):
    pp, lp = list(range(s.k)), list(range(s.n))
    rnd.shuffle(pp)
    rnd.shuffle(lp)
    t = relabel(s, pp, lp)
    assert canonical_code(s) == canonical_code(t)
    pm, lm = isomorphism(s, t)
    assert {(pm[i], lm[j]) for i, j in s.incidences} == set(t.incidences)


@settings(max_examples=150)
@given(structures(4, 4), structures(4, 4))
def test_code_equality_matches_brute_force(s, t):
    same = (s.k, s.n) == (t.k, t.n) and naive_form(s) == naive_form(t)
    assert (canonical_code(s) == canonical_code(t)) == same
    assert (isomorphism(s, t) is not None) == same


@settings(max_examples=60)
@given(structures(4, 4))
def test_iter_isomorphisms_counts_automorphisms(s):
    brute = 0
    inc = set(s.incidences)
    for pp in permutations(range(s.k)):
        for lp in permutations(range(s.n)):
            if {(pp[i], lp[j]) for i, j in inc} == inc:
                brute += 1
    assert sum(1 for _ in iter_isomorphisms(s, s)) == brute


def test_labeling_reproduces_code():
    s = IncidenceStructure(3, 3, frozenset({(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)}))
    lab = canonical_labeling(s)
    assert lab.code.startswith(b"3.3:")
    assert sorted(lab.point_order) == [0, 1, 2] and sorted(lab.line_order) == [0, 1, 2]


def test_parallel_classes():
    # two parallel lines (0, 1) crossed by line 2
    s = IncidenceStructure(2, 3, frozenset({(0, 0), (0, 2), (1, 1), (1, 2)}))
    assert sorted(map(sorted, s.parallel_classes())) == [[0, 1], [2]]

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import INDEFINITE, SPHERICAL, chain
from oracles import (
    bfs_float,
    bfs_words,
    matmul,
    matrix_order,
    positive_roots_with_reflections,
    reflection_matrices,
    reflections_cross,
)
from weylkit.errors import BadGenerator, NotCrystallographic, SameWall, SearchBudgetExceeded, WrongType
from weylkit.gcm import CoxeterMatrix, INF
from weylkit.weyl import (
    CoxeterSystem,
    RegularityVerdict,
    Root,
    StraightnessVerdict,
    WeylElement,
    certify_regular,
    certify_straight,
    coroot,
    coxeter_element,
    element_of_word,
    enumerate_roots,
    find_separated_wall_pair,
    format_word,
    is_straight_up_to,
    length,
    length_and_reduced_word,
    matrix_order as weyl_matrix_order,
    min_length_conjugate,
    pairing_product,
    power_lengths,
    walls_cross,
)
from weylkit.weyl.conjugacy import conjugation_closure

A2 = CoxeterSystem.from_gcm(chain(2))
AFF_A1 = CoxeterSystem.from_gcm([[2, -2], [-2, 2]])
UNIV3 = CoxeterSystem.from_gcm(INDEFINITE["universal3"])


def word(sys, text):
    return element_of_word(sys, sys.parse_word(text))


# --- elements and lengths -----------------------------------------------------------


def test_empty_word_is_identity():
    assert element_of_word(A2, ()) == A2.identity()
    assert A2.identity().matrix == [[1, 0], [0, 1]]


def test_reflections_are_involutions():
    for i in range(3):
        assert element_of_word(UNIV3, (i, i)) == UNIV3.identity()


def test_braid_relation_a2():
    assert word(A2, "1 2 1") == word(A2, "2 1 2")
    assert word(A2, "1 2 1").matrix == [[0, -1], [-1, 0]]


def test_bad_generator():
    with pytest.raises(BadGenerator):
        element_of_word(A2, (2,))
    with pytest.raises(BadGenerator):
        A2.parse_word("1 3")


def test_length_examples():
    assert length_and_reduced_word(A2, A2.identity()) == (0, ())
    assert length(AFF_A1, word(AFF_A1, "1 2 1 2 1 2")) == 6
    ell, red = length_and_reduced_word(A2, word(A2, "1 2 1 2"))
    assert ell == 2 and format_word(red) == "2 1"


def test_reduced_word_reproduces_element():
    w = word(UNIV3, "1 2 3 1 3 2 2 1")
    ell, red = length_and_reduced_word(UNIV3, w)
    assert element_of_word(UNIV3, red) == w and ell == len(red)


def _descent_matches_bfs(sys, A, radius):
    dist, _ = bfs_words(reflection_matrices(A), radius=radius)
    for M, d in dist.items():
        cols = tuple(tuple(M[r][c] for r in range(len(A))) for c in range(len(A)))
        assert length(sys, WeylElement(cols)) == d


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_descent_equals_bfs_finite(name):
    A, _ = SPHERICAL[name]
    _descent_matches_bfs(CoxeterSystem.from_gcm(A), A, None)


@pytest.mark.parametrize("name", ["universal3", "triangle334", "racg_p4"])
def test_descent_equals_bfs_indefinite(name):
    A = INDEFINITE[name]
    _descent_matches_bfs(CoxeterSystem.from_gcm(A), A, 7)


def test_non_crystallographic_h3_lengths():
    H3 = CoxeterSystem(coxeter_matrix=CoxeterMatrix(((1, 5, 2), (5, 1, 3), (2, 3, 1))))
    assert not H3.crystallographic
    dist, closed = bfs_float([[1, 5, 2], [5, 1, 3], [2, 3, 1]])
    assert closed and len(dist) == 120
    # every element reached by BFS words gets its BFS distance as descent length
    seen = {H3.identity(): 0}
    frontier = [H3.identity()]
    r = 0
    while frontier:
        r += 1
        nxt = []
        for u in frontier:
            for i in range(3):
                v = H3.rmul_simple(u, i)
                if v not in seen:
                    seen[v] = r
                    nxt.append(v)
        frontier = nxt
    assert len(seen) == 120
    assert all(length(H3, w) == d for w, d in seen.items())
    assert max(seen.values()) == 15
    with pytest.raises(NotCrystallographic):
        enumerate_roots(H3, 2)


def test_inversion_count_equals_length():
    for name in ("A2", "B2", "A3"):
        A, _ = SPHERICAL[name]
        sys = CoxeterSystem.from_gcm(A)
        roots = enumerate_roots(sys, 20)
        dist, _ = bfs_words(reflection_matrices(A))
        for M in dist:
            cols = tuple(tuple(M[r][c] for r in range(len(A))) for c in range(len(A)))
            w = WeylElement(cols)
            neg = sum(1 for r in roots if all(c <= 0 for c in w.apply(r.coords)))
            assert neg == length(sys, w)


@st.composite
def words(draw, n, max_len=30):
    return draw(st.lists(st.integers(0, n - 1), max_size=max_len))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(sorted(INDEFINITE)), st.data())
def test_length_properties(name, data):
    sys = CoxeterSystem.from_gcm(INDEFINITE[name])
    wd = data.draw(words(sys.n))
    w = element_of_word(sys, wd)
    ell = length(sys, w)
    assert ell <= len(wd) and (len(wd) - ell) % 2 == 0
    assert length(sys, sys.inverse(w)) == ell
    for i in range(sys.n):
        assert abs(length(sys, sys.rmul_simple(w, i)) - ell) == 1


# --- roots -----------------------------------------------------------------------------


def test_roots_a2():
    assert [r.coords for r in enumerate_roots(A2, 2)] == [(1, 0), (0, 1), (1, 1)]


def test_roots_depth_zero():
    assert [r.coords for r in enumerate_roots(UNIV3, 0)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_roots_affine_a1():
    # depth counts reflection applications; depth 1 gives the four roots of height <= 3
    assert {r.coords for r in enumerate_roots(AFF_A1, 1)} == {(1, 0), (0, 1), (1, 2), (2, 1)}
    assert {r.coords for r in enumerate_roots(AFF_A1, 2)} == {(1, 0), (0, 1), (1, 2), (2, 1), (3, 2), (2, 3)}


def test_root_budget():
    with pytest.raises(SearchBudgetExceeded):
        enumerate_roots(UNIV3, 12, cap=100)


@pytest.mark.parametrize("name", sorted(INDEFINITE))
def test_roots_match_oracle_and_are_monotone(name):
    A = INDEFINITE[name]
    sys = CoxeterSystem.from_gcm(A)
    prev = set()
    for d in range(4):
        got = {r.coords for r in enumerate_roots(sys, d)}
        assert got == set(positive_roots_with_reflections(A, d))
        assert prev <= got
        assert all(c >= 0 for v in got for c in v)
        prev = got


def test_coroot_reflection_agrees_with_oracle():
    for name in ("triangle334", "chain220"):
        A = INDEFINITE[name]
        sys = CoxeterSystem.from_gcm(A)
        refl = positive_roots_with_reflections(A, 4)
        for v, R in refl.items():
            b = coroot(sys, Root(v))
            n = len(A)
            # s_beta(alpha_j) = alpha_j - <alpha_j, beta^vee> beta
            for j in range(n):
                aj = tuple(int(k == j) for k in range(n))
                p = sum(bk * sys.pairing_with_coroot(k, aj) for k, bk in enumerate(b))
                assert tuple(R[r][j] for r in range(n)) == tuple(x - p * y for x, y in zip(aj, v))


# --- walls ---------------------------------------------------------------------------


def test_walls_cross_examples():
    a1, a2 = Root((1, 0)), Root((0, 1))
    assert walls_cross(A2, a1, a2)
    assert pairing_product(A2, a1, a2) == 1
    assert not walls_cross(AFF_A1, a1, a2)
    assert pairing_product(AFF_A1, a1, a2) == 4
    with pytest.raises(SameWall):
        walls_cross(A2, a1, a1)
    with pytest.raises(SameWall):
        walls_cross(A2, a1, -a1)


@pytest.mark.parametrize("name", ["triangle334", "chain220", "racg_p4"])
def test_walls_cross_matches_reflection_order(name):
    A = INDEFINITE[name]
    sys = CoxeterSystem.from_gcm(A)
    refl = positive_roots_with_reflections(A, 3)
    roots = sorted(refl)
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            assert walls_cross(sys, Root(a), Root(b)) == reflections_cross(refl[a], refl[b])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["triangle334", "chain220", "universal3"]), st.data())
def test_walls_cross_symmetric_and_invariant(name, data):
    sys = CoxeterSystem.from_gcm(INDEFINITE[name])
    roots = enumerate_roots(sys, 3)
    a, b = data.draw(st.sampled_from(roots)), data.draw(st.sampled_from(roots))
    if a == b:
        return
    w = element_of_word(sys, data.draw(words(sys.n, 8)))
    wa, wb = Root(w.apply(a.coords)), Root(w.apply(b.coords))
    assert walls_cross(sys, a, b) == walls_cross(sys, b, a) == walls_cross(sys, wa, wb)


def test_separated_pair_universal():
    a, b = find_separated_wall_pair(UNIV3, 2)
    assert (a.coords, b.coords) == ((1, 0, 0), (0, 1, 0))


def test_separated_pair_wrong_type():
    with pytest.raises(WrongType):
        find_separated_wall_pair(A2, 3)
    with pytest.raises(WrongType):
        find_separated_wall_pair(CoxeterSystem.from_gcm([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]), 3)
    with pytest.raises(WrongType):
        find_separated_wall_pair(CoxeterSystem.from_gcm([[2, -2, 0], [-2, 2, 0], [0, 0, 2]]), 3)


# --- straightness, conjugacy, regularity ------------------------------------------------


def test_is_straight_examples():
    assert not is_straight_up_to(A2, word(A2, "1 2"), 2)
    assert is_straight_up_to(A2, A2.identity(), 5)
    w = word(UNIV3, "1 2 3")
    assert is_straight_up_to(UNIV3, w, 8)
    assert power_lengths(UNIV3, w, 8) == [3 * k for k in range(1, 9)]
    with pytest.raises(ValueError):
        is_straight_up_to(UNIV3, w, 0)


def test_straight_lengths_match_free_product_oracle():
    # C2*C2*C2: a word is reduced iff no letter repeats consecutively
    w = (0, 1, 2)
    for k in range(1, 9):
        wk = w * k
        assert all(x != y for x, y in zip(wk, wk[1:]))
        assert length(UNIV3, element_of_word(UNIV3, wk)) == 3 * k


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(INDEFINITE)), st.data())
def test_straightness_monotone(name, data):
    sys = CoxeterSystem.from_gcm(INDEFINITE[name])
    w = element_of_word(sys, data.draw(words(sys.n, 8)))
    flags = [is_straight_up_to(sys, w, N) for N in range(1, 6)]
    assert flags == sorted(flags, reverse=True)


def test_min_length_conjugate_examples():
    # least length then lexicographically least reduced word: s1 (see decisions ledger)
    m = min_length_conjugate(A2, word(A2, "1 2 1"))
    assert length(A2, m) == 1 and format_word(length_and_reduced_word(A2, m)[1]) == "1"
    assert min_length_conjugate(A2, A2.identity()) == A2.identity()
    assert length(UNIV3, min_length_conjugate(UNIV3, word(UNIV3, "1 2 3"))) == 3


def test_min_length_conjugate_full_class_a2():
    # oracle: conjugacy class of s1 s2 s1 in the 6-element group is {s1, s2, s1 s2 s1}
    w = word(A2, "1 2 1")
    group = [word(A2, t) for t in ("", "1", "2", "1 2", "2 1", "1 2 1")]
    cls = {g * w * A2.inverse(g) for g in group}
    assert min(length(A2, c) for c in cls) == 1
    assert min_length_conjugate(A2, w) in cls


def test_conjugation_closure_budget():
    with pytest.raises(SearchBudgetExceeded):
        conjugation_closure(A2, word(A2, "1 2 1"), budget=1)


def test_matrix_order():
    assert weyl_matrix_order(A2, word(A2, "1 2")) == 3
    assert weyl_matrix_order(AFF_A1, word(AFF_A1, "1 2")) is None
    F4 = CoxeterSystem.from_gcm(SPHERICAL["F4"][0])
    assert weyl_matrix_order(F4, coxeter_element(F4)) == 12


def test_affine_translation_is_not_torsion():
    # unipotent: char poly (x-1)^2 is cyclotomic, but the element has infinite order
    w = word(AFF_A1, "1 2")
    S = reflection_matrices([[2, -2], [-2, 2]])
    assert matrix_order(matmul(S[0], S[1]), 500) is None
    assert weyl_matrix_order(AFF_A1, w) is None


def test_certify_regular_examples():
    c = certify_regular(UNIV3, coxeter_element(UNIV3))
    assert c.verdict is RegularityVerdict.CERTIFIED_COXETER_ELEMENT
    assert certify_regular(UNIV3, word(UNIV3, "1")).verdict is RegularityVerdict.NOT_HYPERBOLIC
    r = certify_regular(AFF_A1, word(AFF_A1, "1 2"), K=4, D=6)
    assert r.verdict is RegularityVerdict.CERTIFIED_BY_FIXED_SPACE_SEARCH
    assert [e.fixed_dim for e in r.evidence] == [1, 1, 1, 1]
    assert all(e.roots_fixed == 0 for e in r.evidence)


def test_certify_regular_fixed_space_without_shortcut():
    r = certify_regular(UNIV3, coxeter_element(UNIV3), use_coxeter_shortcut=False)
    assert r.verdict is RegularityVerdict.CERTIFIED_BY_FIXED_SPACE_SEARCH
    assert r.power_bound == 6 and r.root_depth == 8


def test_certify_regular_inconclusive_when_power_fixes_a_root():
    # s1 s2 in a reducible system fixes alpha_3 while having infinite order
    sys = CoxeterSystem.from_gcm([[2, -2, 0], [-2, 2, 0], [0, 0, 2]])
    r = certify_regular(sys, word(sys, "1 2"), K=2, D=3)
    assert r.verdict is RegularityVerdict.INCONCLUSIVE
    assert all(e.roots_fixed >= 1 for e in r.evidence)


def test_certify_straight_examples():
    assert certify_straight(A2, word(A2, "1 2")).verdict is StraightnessVerdict.CERTIFIED_NOT_STRAIGHT
    assert certify_straight(A2, A2.identity()).verdict is StraightnessVerdict.CERTIFIED_STRAIGHT
    c = certify_straight(UNIV3, word(UNIV3, "1 2 3"))
    assert c.verdict is StraightnessVerdict.CERTIFIED_STRAIGHT
    assert c.min_conjugate_length == 3


def test_certificate_json_shape():
    c = certify_straight(UNIV3, word(UNIV3, "1 2 3"), 4).to_json()
    assert c["verdict"] == "CertifiedStraight" and c["power_lengths"] == [3, 6, 9, 12]
    assert c["regularity"]["verdict"] == "CertifiedCoxeterElement"


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["universal3", "triangle334", "chain220"]), st.data())
def test_certify_straight_soundness(name, data):
    sys = CoxeterSystem.from_gcm(INDEFINITE[name])
    w = element_of_word(sys, data.draw(words(sys.n, 6)))
    cert = certify_straight(sys, w, 4, D=4)
    if cert.verdict is StraightnessVerdict.CERTIFIED_STRAIGHT:
        assert is_straight_up_to(sys, w, 8)


def test_system_json_round_trip():
    sys = CoxeterSystem.from_json({"gcm": INDEFINITE["chain220"], "names": ["a", "b", "c"]})
    again = CoxeterSystem.from_json(sys.to_json())
    assert again.to_json() == sys.to_json()
    assert again.parse_word("a c b") == (0, 2, 1)
    cm = CoxeterSystem.from_json({"coxeter_matrix": [[1, "inf"], ["inf", 1]]})
    assert cm.crystallographic and cm.coxeter_matrix[0, 1] == INF

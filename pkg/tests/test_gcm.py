from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import AFFINE, INDEFINITE, SPHERICAL
from oracles import bfs_words, cofactor_det, matrix_order, matmul, reflection_matrices
from weylkit.errors import AsymmetricZero, BadCoxeterMatrix, BadDiagonal, BadSign, Decomposable, NotSquare
from weylkit.gcm import (
    INF,
    CoxeterMatrix,
    MatrixType,
    classify,
    classify_type,
    coxeter_matrix_of,
    determinant,
    gcm_of_coxeter,
    is_crystallographic,
    is_indecomposable,
    validate_gcm,
)
from weylkit.linalg import principal_minors


def test_validate_accepts_a2():
    A = validate_gcm([[2, -1], [-1, 2]])
    assert A.n == 2 and A[0, 1] == -1


@pytest.mark.parametrize(
    "raw, err",
    [
        ([[2, 0], [-1, 2]], AsymmetricZero),
        ([[2, 1], [1, 2]], BadSign),
        ([[1, -1], [-1, 2]], BadDiagonal),
        ([[2, -1]], NotSquare),
        ([], NotSquare),
    ],
)
def test_validate_rejects(raw, err):
    with pytest.raises(err):
        validate_gcm(raw)


def test_indecomposable_examples():
    assert is_indecomposable(validate_gcm([[2, -1], [-1, 2]]))
    assert not is_indecomposable(validate_gcm([[2, 0], [0, 2]]))
    assert is_indecomposable(validate_gcm([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]))


def test_classify_examples():
    assert classify_type(validate_gcm([[2, -1], [-1, 2]])) is MatrixType.SPHERICAL
    assert classify_type(validate_gcm([[2, -2], [-2, 2]])) is MatrixType.AFFINE
    assert classify_type(validate_gcm([[2, -2, 0], [-2, 2, -1], [0, -1, 2]])) is MatrixType.INDEFINITE


def test_indefinite_determinant_by_cofactors():
    raw = [[2, -2, 0], [-2, 2, -1], [0, -1, 2]]
    assert cofactor_det(raw) == -2
    assert determinant(validate_gcm(raw)) == -2


def test_classify_decomposable_raises_and_reports_blocks():
    A = validate_gcm([[2, -1, 0], [-1, 2, 0], [0, 0, 2]])
    with pytest.raises(Decomposable):
        classify_type(A)
    cl = classify(A)
    assert cl.verdict == "reducible"
    assert [(ix, t) for ix, t in cl.blocks] == [((0, 1), MatrixType.SPHERICAL), ((2,), MatrixType.SPHERICAL)]


@pytest.mark.parametrize("name", sorted(SPHERICAL))
def test_spherical_golden(name):
    A, order = SPHERICAL[name]
    assert classify_type(validate_gcm(A)) is MatrixType.SPHERICAL
    dist, closed = bfs_words(reflection_matrices(A))
    assert closed and len(dist) == order


@pytest.mark.parametrize("name", sorted(AFFINE))
def test_affine_golden(name):
    A = AFFINE[name]
    assert cofactor_det(A) == 0
    assert classify_type(validate_gcm(A)) is MatrixType.AFFINE


@pytest.mark.parametrize("name", sorted(INDEFINITE))
def test_indefinite_golden(name):
    assert classify_type(validate_gcm(INDEFINITE[name])) is MatrixType.INDEFINITE


@pytest.mark.parametrize(
    "raw, m",
    [([[2, -1], [-1, 2]], 3), ([[2, -1], [-2, 2]], 4), ([[2, -1], [-3, 2]], 6), ([[2, 0], [0, 2]], 2), ([[2, -2], [-2, 2]], INF), ([[2, -1], [-5, 2]], INF)],
)
def test_coxeter_matrix_table(raw, m):
    M = coxeter_matrix_of(validate_gcm(raw))
    assert M[0, 1] == m and M[1, 0] == m and M[0, 0] == 1
    # oracle: order of s1 s2 in the root-lattice representation
    S = reflection_matrices(raw)
    order = matrix_order(matmul(S[0], S[1]), 1000)
    assert order == (None if m == INF else m)


def test_is_crystallographic():
    three = CoxeterMatrix(((1, 3, 3), (3, 1, 3), (3, 3, 1)))
    five = CoxeterMatrix(((1, 5), (5, 1)))
    infs = CoxeterMatrix(((1, INF), (INF, 1)))
    assert is_crystallographic(three)
    assert not is_crystallographic(five)
    assert is_crystallographic(infs)


def test_coxeter_matrix_validation_and_json():
    with pytest.raises(BadCoxeterMatrix):
        CoxeterMatrix(((1, 3), (4, 1)))
    with pytest.raises(BadCoxeterMatrix):
        CoxeterMatrix(((2, 3), (3, 1)))
    M = CoxeterMatrix(((1, INF), (INF, 1)))
    assert M.to_json() == [[1, "inf"], ["inf", 1]]
    assert CoxeterMatrix.from_json(M.to_json()) == M


# --- properties -------------------------------------------------------------------


@st.composite
def gcms(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                A[i][j] = -draw(st.integers(1, 3))
                A[j][i] = -draw(st.integers(1, 3))
    return A


@settings(max_examples=150, deadline=None)
@given(gcms(max_n=6))
def test_minors_match_cofactor_oracle(A):
    minors = principal_minors(A)
    for idx, d in minors.items():
        assert d == cofactor_det([[A[i][j] for j in idx] for i in idx])


@settings(max_examples=100, deadline=None)
@given(gcms(), st.randoms(use_true_random=False))
def test_classification_invariant_under_relabeling(A, rnd):
    G = validate_gcm(A)
    perm = list(range(G.n))
    rnd.shuffle(perm)
    P = G.permuted(perm)
    cl, cp = classify(G), classify(P)
    assert cl.verdict == cp.verdict
    assert sorted(t.value for _, t in cl.blocks) == sorted(t.value for _, t in cp.blocks)


@settings(max_examples=100, deadline=None)
@given(gcms())
def test_coxeter_round_trip(A):
    M = coxeter_matrix_of(validate_gcm(A))
    assert coxeter_matrix_of(gcm_of_coxeter(M)) == M


@settings(max_examples=40, deadline=None)
@given(gcms(max_n=4))
def test_finiteness_oracle_agrees(A):
    G = validate_gcm(A)
    finite = all(t is MatrixType.SPHERICAL for _, t in classify(G).blocks)
    dist, closed = bfs_words(reflection_matrices(A), radius=40, cap=20_000)
    if finite:
        assert closed
    else:
        assert not closed

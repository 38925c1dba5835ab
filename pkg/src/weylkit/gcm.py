"""Generalized Cartan matrices: validation, type classification and the
associated Coxeter matrix."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    AsymmetricZero,
    BadCoxeterMatrix,
    BadDiagonal,
    BadSign,
    Decomposable,
    NotSquare,
)
from .linalg import det, principal_minors

INF = math.inf

# A[i][j] * A[j][i] -> m_ij; products >= 4 give an infinite dihedral subgroup.
_PRODUCT_TO_M = {0: 2, 1: 3, 2: 4, 3: 6}
CRYSTALLOGRAPHIC_ORDERS = frozenset({2, 3, 4, 6, INF})


class MatrixType(str, Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def submatrix(self, idx: Sequence[int]) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def permuted(self, perm: Sequence[int]) -> "GeneralizedCartanMatrix":
        """Relabel indices: new index k corresponds to old index perm[k]."""
        return self.submatrix(perm)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric Coxeter matrix; ``math.inf`` encodes an infinite exponent."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i in range(n):
            if len(self.entries[i]) != n:
                raise BadCoxeterMatrix("Coxeter matrix must be square")
            if self.entries[i][i] != 1:
                raise BadCoxeterMatrix(f"m[{i}][{i}] must be 1")
            for j in range(n):
                m = self.entries[i][j]
                if m != self.entries[j][i]:
                    raise BadCoxeterMatrix(f"m[{i}][{j}] != m[{j}][{i}]")
                if i != j and not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise BadCoxeterMatrix(f"m[{i}][{j}] = {m!r} is not an integer >= 2 or inf")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> list[list]:
        return [["inf" if m == INF else int(m) for m in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows) -> "CoxeterMatrix":
        def conv(m):
            if m in ("inf", "∞", None) or m == INF or (isinstance(m, int) and m <= 0):
                return INF
            if isinstance(m, float) and m.is_integer():
                return int(m)
            return m

        return cls(tuple(tuple(conv(m) for m in row) for row in rows))


def validate_gcm(raw) -> GeneralizedCartanMatrix:
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare("generalized Cartan matrix must be a non-empty square matrix")
    for i, r in enumerate(rows):
        for j, a in enumerate(r):
            if isinstance(a, bool) or not isinstance(a, int):
                if isinstance(a, float) and a.is_integer():
                    rows[i][j] = int(a)
                else:
                    raise NotSquare(f"entry A[{i}][{j}] = {a!r} is not an integer")
    for i in range(n):
        if rows[i][i] != 2:
            raise BadDiagonal(f"A[{i}][{i}] = {rows[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise BadSign(f"A[{i}][{j}] = {rows[i][j]} is positive")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(f"A[{i}][{j}] = {rows[i][j]} but A[{j}][{i}] = {rows[j][i]}")
    return GeneralizedCartanMatrix(tuple(tuple(r) for r in rows))


def components(A: GeneralizedCartanMatrix) -> list[tuple[int, ...]]:
    """Connected components of the support graph, each sorted, ordered by least index."""
    n = A.n
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and A[i, j] != 0:
                    seen[j] = True
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def is_indecomposable(A: GeneralizedCartanMatrix) -> bool:
    return len(components(A)) == 1


def classify_type(A: GeneralizedCartanMatrix) -> MatrixType:
    """Spherical / affine / indefinite verdict for an indecomposable GCM."""
    if not is_indecomposable(A):
        raise Decomposable(f"matrix splits into blocks {components(A)}")
    minors = principal_minors(A.entries)
    full = tuple(range(A.n))
    if all(v > 0 for v in minors.values()):
        return MatrixType.SPHERICAL
    if minors[full] == 0 and all(v > 0 for k, v in minors.items() if k != full):
        return MatrixType.AFFINE
    return MatrixType.INDEFINITE


@dataclass(frozen=True)
class Classification:
    indecomposable: bool
    type: MatrixType | None
    blocks: tuple[tuple[tuple[int, ...], MatrixType], ...]

    @property
    def verdict(self) -> str:
        return self.type.value if self.type is not None else "reducible"

    def to_json(self) -> dict:
        return {
            "indecomposable": self.indecomposable,
            "type": self.verdict,
            "blocks": [{"indices": list(ix), "type": t.value} for ix, t in self.blocks],
        }


def classify(A: GeneralizedCartanMatrix) -> Classification:
    """Block-wise classification; decomposable input gets verdict ``reducible``."""
    blocks = tuple((ix, classify_type(A.submatrix(ix))) for ix in components(A))
    if len(blocks) == 1:
        return Classification(True, blocks[0][1], blocks)
    return Classification(False, None, blocks)


def coxeter_matrix_of(A: GeneralizedCartanMatrix) -> CoxeterMatrix:
    n = A.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1)
            else:
                row.append(_PRODUCT_TO_M.get(A[i, j] * A[j, i], INF))
        rows.append(tuple(row))
    return CoxeterMatrix(tuple(rows))


def is_crystallographic(M: CoxeterMatrix) -> bool:
    return all(M[i, j] in CRYSTALLOGRAPHIC_ORDERS for i in range(M.n) for j in range(M.n) if i != j)


def gcm_of_coxeter(M: CoxeterMatrix) -> GeneralizedCartanMatrix:
    """A canonical right inverse of :func:`coxeter_matrix_of`.

    Asymmetric pairs (m = 4, 6) put the -1 above the diagonal.
    """
    if not is_crystallographic(M):
        raise BadCoxeterMatrix("only crystallographic Coxeter matrices come from a GCM")
    pairs = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3), INF: (-2, -2)}
    n = M.n
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j], rows[j][i] = pairs[M[i, j]]
    return validate_gcm(rows)


def determinant(A: GeneralizedCartanMatrix) -> int:
    return det(A.entries)

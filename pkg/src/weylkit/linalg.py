"""Exact linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def det(rows: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def principal_minors(rows: Matrix) -> dict[tuple[int, ...], int]:
    """All principal minors, keyed by the (sorted) index subset."""
    n = len(rows)
    out = {}
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            out[idx] = det([[rows[i][j] for j in idx] for i in idx])
    return out


def row_reduce(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; zero rows dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[Fraction]] = []
    pivot_row = 0
    for c in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][c] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][c]
        m[pivot_row] = [x / piv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    out = [r for r in m[:pivot_row]]
    return out


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows))


def in_kernel(reduced: Sequence[Sequence[Fraction]], vec: Sequence[int]) -> bool:
    """True iff ``vec`` is annihilated by the matrix whose RREF is ``reduced``."""
    return all(sum(a * b for a, b in zip(r, vec)) == 0 for r in reduced)


def matmul(a: Matrix, b: Matrix) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]

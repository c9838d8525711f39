"""Exact dense linear algebra over the rationals.

Matrices are plain lists of Fraction rows.  The block sizes produced by
the sector decomposition in `fischer` are small (tens of rows), so plain
reduced Gaussian elimination is both simple and fast enough.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


class SingularMatrixError(ArithmeticError):
    """Raised when a system expected to be regular turns out not to be."""


def _copy(matrix: Matrix) -> Matrix:
    return [row[:] for row in matrix]


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    work = _copy(matrix)
    rows = len(work)
    cols = len(work[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = Fraction(1) / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(rows):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return work, pivots


def rank(matrix: Matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Matrix) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return []
    cols = len(matrix[0])
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis: list[Vector] = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


def solve(matrix: Matrix, rhs: Vector) -> Vector:
    """Exact solution of a regular square system; SingularMatrixError otherwise."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve expects a square matrix and a matching right-hand side")
    work = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots = rref(work)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [reduced[i][n] for i in range(n)]


def invert(matrix: Matrix) -> Matrix:
    """Exact inverse of a regular square matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("invert expects a square matrix")
    work = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = rref(work)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in reduced]


def mat_vec(matrix: Matrix, vec: Vector) -> Vector:
    return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in matrix]

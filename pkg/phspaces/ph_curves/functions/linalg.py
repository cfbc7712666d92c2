"""Exact Gauss-Jordan elimination over Q and Q(sqrt d).

Matrices are lists of rows of ``QuadExtScalar``. Pivoting takes the first
non-zero entry of a column, which keeps every result deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from ph_curves.functions.exactnum import ONE, ZERO, as_scalar


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns:
        (reduced rows, pivot column indices). The input is not modified.
    """
    matrix = [[as_scalar(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        for r in range(pivot_row, len(matrix)):
            if matrix[r][col]:
                break
        else:
            continue
        matrix[pivot_row], matrix[r] = matrix[r], matrix[pivot_row]
        inv = matrix[pivot_row][col].inverse()
        matrix[pivot_row] = [x * inv for x in matrix[pivot_row]]
        for other in range(len(matrix)):
            factor = matrix[other][col]
            if other != pivot_row and factor:
                matrix[other] = [
                    x - factor * p
                    for x, p in zip(matrix[other], matrix[pivot_row])
                ]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(matrix):
            break
    return matrix, pivots


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows x = 0}, one vector per free column, in column order.

    Each basis vector has a one at its free column and zeros at the other
    free columns.
    """
    if not rows:
        return [
            [ONE if i == j else ZERO for i in range(ncols)]
            for j in range(ncols)
        ]
    matrix, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vector = [ZERO] * ncols
        vector[f] = ONE
        for row, p in zip(matrix, pivots):
            vector[p] = -row[f]
        basis.append(vector)
    return basis


@dataclass(frozen=True)
class LinearSolution:
    solution: list | None
    rank: int
    consistent: bool


def solve(rows, rhs, ncols):
    """Solve ``rows x = rhs``; free variables of a singular system are zero."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    matrix, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return LinearSolution(None, len(pivots) - 1, False)
    solution = [ZERO] * ncols
    for row, p in zip(matrix, pivots):
        solution[p] = row[ncols]
    return LinearSolution(solution, len(pivots), True)

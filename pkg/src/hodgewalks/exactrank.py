"""Exact rank of an integer matrix by fraction-free (Bareiss) elimination.

Serves as the floating-point-free oracle for Betti numbers. Python integers
are arbitrary precision, so no overflow and no rounding anywhere.
"""
from __future__ import annotations

from typing import Sequence

__all__ = ["integer_rank"]


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a matrix with integer entries."""
    A = [[int(x) for x in row] for row in matrix]
    if not A or not A[0]:
        return 0
    nrows, ncols = len(A), len(A[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(ncols):
        # find a pivot at or below `row`
        pivot_row = next((r for r in range(row, nrows) if A[r][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            A[row], A[pivot_row] = A[pivot_row], A[row]
        pivot = A[row][col]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                A[r][c] = (A[r][c] * pivot - A[r][col] * A[row][c]) // prev_pivot
            A[r][col] = 0
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank

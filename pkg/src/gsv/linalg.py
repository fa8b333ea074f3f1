"""Exact linear algebra over the rationals.

Plain Gauss-Jordan elimination on Fraction entries: no rounding, no
pivot-size heuristics.  Pivots are chosen deterministically (leftmost
column, topmost unused row), so reduced forms, ranks and nullspace
bases are reproducible byte for byte across runs.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[Row]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Canonical basis of the right kernel of the matrix.

    One basis vector per free column, in ascending column order, with a
    1 in its free coordinate; pivot coordinates are back-substituted.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[Row] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -reduced[r][free]
        basis.append(vec)
    return basis

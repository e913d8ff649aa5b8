"""Fraction-free (Bareiss) elimination over exact rationals.

Rows are first scaled to integers by their denominators' lcm, so the
elimination itself runs on Python ints and every Bareiss division is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import SingularMatrix


def _integer_row(row: Sequence) -> tuple[list[int], int]:
    den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
    return [int(Fraction(v) * den) for v in row], den


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[int], int]:
    """Fraction-free row echelon form in place.

    Pivots are the first nonzero entry found in column order.  Returns the
    pivot columns and the sign of the row permutation.
    """
    nrows = len(rows)
    prev = 1
    sign = 1
    r = 0
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][col] != 0), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            sign = -sign
        piv = rows[r]
        pv = piv[col]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * pv - f * piv[j]) // prev
            row[col] = 0
        prev = pv
        pivots.append(col)
        r += 1
    return pivots, sign


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    rows, scale = [], 1
    for row in matrix:
        ints, den = _integer_row(row)
        rows.append(ints)
        scale *= den
    pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1], scale)


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``A X = B`` for square nonsingular A; ``rhs`` is a list of columns.

    Returns the solution columns. Raises SingularMatrix if A is singular.
    """
    n = len(matrix)
    m = len(rhs)
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError("solve needs a square matrix")
        ints, _ = _integer_row(list(row) + [col[i] for col in rhs])
        rows.append(ints)
    pivots, _ = _bareiss(rows, n + m)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    det = rows[n - 1][n - 1]
    out = []
    for k in range(m):
        # fraction-free back substitution: y = det * x is integral
        y = [0] * n
        for i in range(n - 1, -1, -1):
            row = rows[i]
            acc = det * row[n + k]
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * y[j]
            y[i] = acc // row[i]
        out.append([Fraction(v, det) for v in y])
    return out


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0])
    rows = [_integer_row(row)[0] for row in matrix]
    pivots, _ = _bareiss(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = rows[r]
            acc = Fraction(0)
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    acc -= row[j] * x[j]
            x[pc] = acc / row[pc]
        basis.append(x)
    return basis


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    rows = [_integer_row(row)[0] for row in matrix]
    pivots, _ = _bareiss(rows, len(rows[0]))
    return len(pivots)

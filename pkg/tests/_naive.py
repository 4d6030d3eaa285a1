"""Slow, obviously-correct reference implementations used as test oracles.

Everything here works on plain lists of 0/1 ints. Nothing is imported
from the package under test, so these stay independent of the bit-packed
code paths they are used to check.
"""

from __future__ import annotations

from itertools import product


def naive_rref(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan over GF(2) on a list-of-lists matrix."""
    mat = [row[:] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(m):
            if i != r and mat[i][c]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return mat, pivots


def naive_rank(rows: list[list[int]]) -> int:
    return len(naive_rref(rows)[1])


def naive_matvec(rows: list[list[int]], x: list[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) % 2 for row in rows]


def exhaustive_solutions(
    rows: list[list[int]], b: list[int], n_cols: int | None = None
) -> list[list[int]]:
    """All x with A x = b, by trying every vector. Exponential; keep n small.

    n_cols disambiguates the width of a matrix with no rows.
    """
    n = n_cols if n_cols is not None else (len(rows[0]) if rows else 0)
    out = []
    for bits in product((0, 1), repeat=n):
        x = list(bits)
        if naive_matvec(rows, x) == b:
            out.append(x)
    return out


def exhaustive_min_weight(rows: list[list[int]], b: list[int]) -> int | None:
    sols = exhaustive_solutions(rows, b)
    if not sols:
        return None
    return min(sum(x) for x in sols)


def classic_grid_rows(height: int, width: int) -> list[list[int]]:
    """Closed-neighborhood matrix of the height x width grid, row-major.

    Built from coordinate arithmetic only, so it does not depend on the
    package's graph or generator code.
    """
    n = height * width
    rows = []
    for i in range(n):
        r, c = divmod(i, width)
        row = [0] * n
        row[i] = 1
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            rr, cc = r + dr, c + dc
            if 0 <= rr < height and 0 <= cc < width:
                row[rr * width + cc] = 1
        rows.append(row)
    return rows

"""Exact rank and determinant by fraction-free (Bareiss) elimination.

Matrices are lists of rows.  Entries may be ints or Fractions; with ints all
intermediate values stay integral, with Fractions the exact divisions stay
exact.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Number = int | Fraction


def _bareiss(rows: Sequence[Sequence[Number]]):
    """Reduce a copy of ``rows`` to echelon form; return (rank, sign, last_pivot)."""
    a = [list(r) for r in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                v = row_i[j] * p - row_r[j] * f
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = v // prev if isinstance(v, int) and isinstance(prev, int) else v / prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign, prev


def rank(rows: Sequence[Sequence[Number]]) -> int:
    if not rows or not rows[0]:
        return 0
    return _bareiss(rows)[0]


def det(rows: Sequence[Sequence[Number]]) -> Number:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    r, sign, last = _bareiss(rows)
    return sign * last if r == n else 0


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], inner: int | None = None):
    """Product of an (r x n) and an (n x c) matrix; ``inner`` gives n when a has no rows."""
    n = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(cols)] for i in range(len(a))]

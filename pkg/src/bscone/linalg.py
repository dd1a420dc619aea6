"""Exact matrix rank over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


class ExactMatrix:
    """Dense matrix of rationals with optional row/column labels."""

    def __init__(self, rows, row_labels=None, col_labels=None):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.ncols = len(self.rows[0]) if self.rows else (len(col_labels) if col_labels else 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("ragged matrix")
        self.row_labels = list(row_labels) if row_labels is not None else list(range(len(self.rows)))
        self.col_labels = list(col_labels) if col_labels is not None else list(range(self.ncols))

    @property
    def shape(self):
        return len(self.rows), self.ncols

    def rank(self, method: str = "bareiss") -> int:
        if method == "bareiss":
            return bareiss_rank(self._integer_rows())
        if method == "gauss":
            return gauss_rank(self.rows)
        raise ValueError(f"unknown rank method {method!r}")

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.rows:
            den = reduce(lambda x, y: x * y // math.gcd(x, y), (q.denominator for q in row), 1)
            out.append([int(q * den) for q in row])
        return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) elimination; pivots chosen left to right, top down."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, nrows):
            f = M[r][col]
            M[r] = [(p * M[r][c] - f * M[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def gauss_rank(rows) -> int:
    """Rational Gaussian elimination sweeping columns right to left, pivoting on the bottom-most row."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    used = [False] * nrows
    rank = 0
    for col in reversed(range(ncols)):
        pivot = next((r for r in reversed(range(nrows)) if not used[r] and M[r][col] != 0), None)
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        pv = M[pivot]
        for r in range(nrows):
            if not used[r] and M[r][col] != 0:
                f = M[r][col] / pv[col]
                M[r] = [x - f * y for x, y in zip(M[r], pv)]
    return rank
